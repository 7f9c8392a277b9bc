"""Exact integer and rational linear algebra.

Everything below runs on Python's arbitrary-precision integers and
``fractions.Fraction``; no floating point is used anywhere.  Matrices are
plain lists of lists, vectors are tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

IntMatrix = list[list[int]]
RatMatrix = list[list[Fraction]]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: list[list]) -> list[list]:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: list[list], b: list[list]) -> list[list]:
    if a and b:
        assert len(a[0]) == len(b)
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(m: list[list], v) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def is_symmetric(m: list[list]) -> bool:
    n = len(m)
    if any(len(row) != n for row in m):
        return False
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def dims(m: list[list]) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def det(m: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(m)
    if n == 0:
        return 1
    assert all(len(row) == n for row in m)
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form: left @ m @ right == diag(factors), transforms unimodular."""

    factors: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.factors if d != 0)


def _min_pivot(a, t, rows, cols):
    # Smallest |entry| in the trailing submatrix; row-major scan breaks ties.
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            v = a[i][j]
            if v != 0 and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def snf(m: list[list[int]]) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Kummer-Smith elimination; the pivot is always the entry of minimal
    nonzero absolute value (row-major scan on ties), which keeps coefficient
    growth tame on the 40x40 Gram matrices this package feeds it.
    """
    rows, cols = dims(m)
    a = [[int(x) for x in row] for row in m]
    left = identity(rows)
    right = identity(cols)
    t = 0
    while t < min(rows, cols):
        pos = _min_pivot(a, t, rows, cols)
        if pos is None:
            break
        pi, pj = pos
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            left[t], left[pi] = left[pi], left[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in right:
                row[t], row[pj] = row[pj], row[t]
        pivot = a[t][t]
        dirty = False
        for i in range(t + 1, rows):
            q = a[i][t] // pivot
            if q:
                for j in range(t, cols):
                    a[i][j] -= q * a[t][j]
                for j in range(rows):
                    left[i][j] -= q * left[t][j]
            if a[i][t] != 0:
                dirty = True
        for j in range(t + 1, cols):
            q = a[t][j] // pivot
            if q:
                for i in range(t, rows):
                    a[i][j] -= q * a[i][t]
                for i in range(cols):
                    right[i][j] -= q * right[i][t]
            if a[t][j] != 0:
                dirty = True
        if dirty:
            continue
        # Pivot must divide the rest of the submatrix before moving on.
        fix = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % pivot != 0:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            for j in range(cols):
                a[t][j] += a[fix][j]
            for j in range(rows):
                left[t][j] += left[fix][j]
            continue
        t += 1
    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            for j in range(cols):
                a[i][j] = -a[i][j]
            for j in range(rows):
                left[i][j] = -left[i][j]
    factors = tuple(a[i][i] for i in range(min(rows, cols)))
    check = matmul(matmul(left, [list(r) for r in m]), right)
    assert all(
        check[i][j] == (factors[i] if i == j and i < len(factors) else 0)
        for i in range(rows)
        for j in range(cols)
    ), "SNF internal inconsistency"
    return SnfResult(
        factors=factors,
        left=tuple(tuple(r) for r in left),
        right=tuple(tuple(r) for r in right),
    )


def rank_signature(m: list[list]) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a symmetric matrix, exactly.

    Symmetric Gaussian congruence over the rationals.  Pivots prefer the
    first nonzero diagonal entry; if the diagonal is exhausted, the first
    nonzero off-diagonal entry is folded onto the diagonal (standard
    completion), so no square roots are ever needed.
    """
    n = len(m)
    if n == 0:
        return (0, 0, 0)
    if not is_symmetric(m):
        raise ValueError("rank_signature requires a symmetric matrix")
    a = [[Fraction(x) for x in row] for row in m]
    pos = neg = zero = 0
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][i] != 0:
                piv = i
                break
        if piv is None:
            off = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        off = (i, j)
                        break
                if off is not None:
                    break
            if off is None:
                zero += n - k
                break
            i, j = off
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / p
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
                for r in range(k, n):
                    a[r][i] -= f * a[r][k]
    return (pos, neg, zero)


def kernel_basis(m: list[list]) -> list[tuple[Fraction, ...]]:
    """Basis of the rational null space {v : m @ v = 0}, via exact RREF."""
    rows, cols = dims(m)
    a = [[Fraction(x) for x in row] for row in m]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(tuple(v))
    return basis


def int_kernel(m: list[list[int]]) -> list[tuple[int, ...]]:
    """Basis of the saturated integer kernel {x in Z^cols : m @ x = 0}."""
    rows, cols = dims(m)
    if rows == 0:
        return [tuple(row) for row in identity(cols)]
    res = snf(m)
    r = res.rank
    right = res.right  # columns r..cols-1 span the kernel
    return [tuple(right[i][j] for i in range(cols)) for j in range(r, cols)]


def hnf_rows(rows_in: list[list[int]]) -> list[list[int]]:
    """Canonical row Hermite normal form basis of the lattice the rows span.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot); zero rows are dropped.
    """
    mat = [list(map(int, row)) for row in rows_in if any(row)]
    if not mat:
        return []
    by_pivot: dict[int, list[int]] = {}
    for vec in mat:
        v = list(vec)
        while True:
            c = next((i for i, x in enumerate(v) if x != 0), None)
            if c is None:
                break
            row = by_pivot.get(c)
            if row is None:
                by_pivot[c] = v
                break
            if v[c] % row[c] == 0:
                q = v[c] // row[c]
                v = [b - q * a for a, b in zip(row, v)]
            else:
                # 2x2 unimodular combination; both vectors vanish before c.
                g, x, y = xgcd(row[c], v[c])
                rc, vc = row[c], v[c]
                by_pivot[c] = [x * a + y * b for a, b in zip(row, v)]
                v = [(-(vc // g)) * a + (rc // g) * b for a, b in zip(row, v)]
    basis = [by_pivot[c] for c in sorted(by_pivot)]
    for row in basis:
        c = next(i for i, x in enumerate(row) if x != 0)
        if row[c] < 0:
            row[:] = [-x for x in row]
    for k in range(len(basis) - 1, -1, -1):
        c = next(i for i, x in enumerate(basis[k]) if x != 0)
        for i in range(k):
            q = basis[i][c] // basis[k][c]
            if q:
                basis[i] = [a - q * b for a, b in zip(basis[i], basis[k])]
    return basis


def solve_in_rows(rows: list[list], target) -> tuple[Fraction, ...] | None:
    """Coefficients x with sum x_i * rows[i] == target, or None.

    Exact Gaussian elimination on the transposed system; when the rows are
    independent the solution is unique.
    """
    k = len(rows)
    if k == 0:
        return () if not any(target) else None
    cols = len(rows[0])
    a = [[Fraction(rows[i][j]) for i in range(k)] + [Fraction(target[j])] for j in range(cols)]
    pivots = []
    r = 0
    for c in range(k):
        piv = None
        for i in range(r, cols):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(cols):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    for i in range(r, cols):
        if a[i][k] != 0:
            return None
    x = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        x[c] = a[i][k]
    # rows may be dependent; verify the candidate actually works
    for j in range(cols):
        if sum(x[i] * Fraction(rows[i][j]) for i in range(k)) != Fraction(target[j]):
            return None
    return tuple(x)
