"""Integral lattices and their discriminant / mod-2 invariants.

A lattice is a free Z-module with an integer Gram matrix.  The operations
here cover named ADE/U constructions, determinants, discriminant groups and
forms, Nikulin overlattice gluing, the mod-2 quadratic form on L/2L with its
half-integer overlattices, orthogonal complements and root reflections.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import exact

Vector = tuple  # entries int or Fraction

MOD2_TABLE_MAX_RANK = 16
DISC_CHECK_MAX_ORDER = 4096


@dataclass(frozen=True)
class Lattice:
    gram: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        g = [list(row) for row in self.gram]
        if not exact.is_symmetric(g):
            raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def gram_rows(self) -> list[list[int]]:
        return [list(row) for row in self.gram]


def make_lattice(gram: list[list[int]], name: str | None = None) -> Lattice:
    return Lattice(gram=tuple(tuple(int(x) for x in row) for row in gram), name=name)


def pairing(lat: Lattice, x: Vector, y: Vector):
    if len(x) != lat.rank or len(y) != lat.rank:
        raise ValueError("vector length does not match lattice rank")
    return sum(
        x[i] * lat.gram[i][j] * y[j] for i in range(lat.rank) for j in range(lat.rank)
    )


def det(lat: Lattice) -> int:
    return exact.det(lat.gram_rows())


def signature(lat: Lattice) -> tuple[int, int, int]:
    return exact.rank_signature(lat.gram_rows())


def is_even(lat: Lattice) -> bool:
    return all(lat.gram[i][i] % 2 == 0 for i in range(lat.rank))


def direct_sum(*lats: Lattice) -> Lattice:
    n = sum(l.rank for l in lats)
    g = [[0] * n for _ in range(n)]
    off = 0
    for l in lats:
        for i in range(l.rank):
            for j in range(l.rank):
                g[off + i][off + j] = l.gram[i][j]
        off += l.rank
    name = "+".join(l.name for l in lats) if all(l.name for l in lats) else None
    return make_lattice(g, name)


def rescale(lat: Lattice, m: int) -> Lattice:
    if m == 0:
        raise ValueError("rescale factor must be nonzero")
    g = [[m * x for x in row] for row in lat.gram]
    name = f"{lat.name}({m})" if lat.name else None
    return make_lattice(g, name)


# --- named constructions -------------------------------------------------

def _cartan_edges(family: str, n: int) -> list[tuple[int, int]]:
    if family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if family == "D":
        return [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
    # E6/E7/E8: path of n-1 nodes, branch node hung off the third one
    return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]


def _ade_gram(family: str, n: int) -> list[list[int]]:
    g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in _cartan_edges(family, n):
        g[a][b] = g[b][a] = 1
    return g


_TERM_RE = re.compile(r"^([A-Z][0-9]*)(?:\((-?[0-9]+)\))?$")


def make_named(spec: str) -> Lattice:
    """Build a lattice from a name expression, e.g. "A5+A5+A1+A1" or "U(2)".

    Terms are A<m> (m>=1), D<n> (n>=4), E<k> (k in 6,7,8), U and E10, each
    optionally rescaled by an integer in parentheses; "+" is orthogonal sum.
    """
    parts = [p.strip() for p in spec.split("+")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed lattice spec: {spec!r}")
    summands = []
    for part in parts:
        m = _TERM_RE.match(part)
        if not m:
            raise ValueError(f"malformed lattice term: {part!r}")
        base, scale = m.group(1), m.group(2)
        if base == "U":
            lat = make_lattice([[0, 1], [1, 0]], "U")
        elif base == "E10":
            lat = direct_sum(make_lattice([[0, 1], [1, 0]], "U"),
                             make_lattice(_ade_gram("E", 8), "E8"))
            lat = make_lattice(lat.gram_rows(), "E10")
        else:
            family, idx = base[0], base[1:]
            if family not in "ADE" or not idx:
                raise ValueError(f"unknown lattice name: {part!r}")
            n = int(idx)
            if family == "A" and n < 1:
                raise ValueError("A_m requires m >= 1")
            if family == "D" and n < 4:
                raise ValueError("D_n requires n >= 4")
            if family == "E" and n not in (6, 7, 8):
                raise ValueError("E_k requires k in {6, 7, 8}")
            lat = make_lattice(_ade_gram(family, n), base)
        if scale is not None:
            lat = rescale(lat, int(scale))
        summands.append(lat)
    return summands[0] if len(summands) == 1 else direct_sum(*summands)


# --- discriminant group and forms ----------------------------------------

@dataclass(frozen=True)
class DiscriminantGroup:
    """L*/L: cyclic invariant factors (>1) with rational coset-generator lifts."""

    invariant_factors: tuple[int, ...]
    generator_lifts: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n


def _frac_mod1(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) % 1 for x in v)


def _in_dual(lat: Lattice, x: Vector) -> bool:
    return all(Fraction(p).denominator == 1 for p in exact.mat_vec(lat.gram_rows(), x))


def discriminant_group(lat: Lattice) -> DiscriminantGroup:
    d = det(lat)
    if d == 0:
        raise ValueError("degenerate Gram matrix has no discriminant group")
    res = exact.snf(lat.gram_rows())
    n = lat.rank
    factors = []
    lifts = []
    for i, di in enumerate(res.factors):
        if di > 1:
            lift = _frac_mod1(Fraction(res.right[r][i], di) for r in range(n))
            assert _in_dual(lat, lift)
            factors.append(di)
            lifts.append(lift)
    group = DiscriminantGroup(tuple(factors), tuple(lifts))
    assert group.order == abs(d)
    return group


def disc_q(lat: Lattice, x: Vector) -> Fraction:
    """q_L(x mod L) = x^2 mod 2Z, reduced into [0, 2). Defined for even L only."""
    if not is_even(lat):
        raise ValueError("discriminant quadratic form is defined only for even lattices")
    if not _in_dual(lat, x):
        raise ValueError("lift is not in the dual lattice")
    return Fraction(pairing(lat, x, x)) % 2


def disc_b(lat: Lattice, x: Vector, y: Vector) -> Fraction:
    """b_L(x, y) = <x, y> mod Z, reduced into [0, 1)."""
    if not _in_dual(lat, x) or not _in_dual(lat, y):
        raise ValueError("lift is not in the dual lattice")
    return Fraction(pairing(lat, x, y)) % 1


def _coset_span(lat: Lattice, gens) -> set[tuple[Fraction, ...]]:
    """Subgroup of L*/L generated by the given dual lifts, as canonical reps."""
    for g in gens:
        if not _in_dual(lat, g):
            raise ValueError("glue generator is not in the dual lattice")
    zero = _frac_mod1([0] * lat.rank)
    seen = {zero}
    frontier = [zero]
    gens_canon = [_frac_mod1(g) for g in gens]
    while frontier:
        cur = frontier.pop()
        for g in gens_canon:
            nxt = _frac_mod1(a + b for a, b in zip(cur, g))
            if nxt not in seen:
                if len(seen) > 10**5:
                    raise ValueError("glue subgroup too large")
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def _disc_q_values(lat: Lattice) -> list[Fraction]:
    """Multiset of q_L over all of L*/L (enumerated; caller bounds the order)."""
    group = discriminant_group(lat)
    elems = _coset_span(lat, group.generator_lifts)
    return sorted(disc_q(lat, x) for x in elems)


def overlattice(lat: Lattice, glue) -> Lattice:
    """Even overlattice obtained by adjoining an isotropic glue subgroup.

    ``glue`` is a sequence of rational dual-coset lifts; the subgroup they
    generate must be isotropic for q_L.  The result L' satisfies
    det(L') * |H|^2 = det(L), and its discriminant form is checked against
    q_L restricted to H-perp/H when the groups are small enough to enumerate.
    """
    if not is_even(lat):
        raise ValueError("overlattice gluing requires an even lattice")
    subgroup = _coset_span(lat, glue)
    for h in subgroup:
        if disc_q(lat, h) != 0:
            raise ValueError(f"glue subgroup is not isotropic at {h}")
    n = lat.rank
    den = 1
    for h in subgroup:
        for c in h:
            den = den * c.denominator // gcd(den, c.denominator)
    rows = [[den if i == j else 0 for j in range(n)] for i in range(n)]
    rows += [[int(c * den) for c in h] for h in sorted(subgroup)]
    basis = [[Fraction(x, den) for x in row] for row in exact.hnf_rows(rows)]
    assert len(basis) == n
    gram = _basis_gram(lat, basis)
    out = make_lattice(gram)
    if not is_even(out):
        raise AssertionError("overlattice of an even lattice along isotropic glue must be even")
    index = len(subgroup)
    if det(out) * index * index != det(lat):
        raise AssertionError("overlattice index does not match glue subgroup order")
    _check_overlattice_disc_form(lat, out, subgroup)
    return out


def _basis_gram(lat: Lattice, basis) -> list[list[int]]:
    k = len(basis)
    g = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            v = Fraction(pairing(lat, basis[i], basis[j]))
            if v.denominator != 1:
                raise ValueError("non-integral pairing in constructed basis")
            g[i][j] = int(v)
    return g


def _check_overlattice_disc_form(lat: Lattice, over: Lattice, subgroup) -> None:
    d = abs(det(lat))
    if d > DISC_CHECK_MAX_ORDER:
        return
    group = discriminant_group(lat)
    elems = _coset_span(lat, group.generator_lifts)
    perp = [
        x
        for x in elems
        if all(disc_b(lat, x, h) == 0 for h in subgroup)
    ]
    cosets = {}
    for x in perp:
        key = min(_frac_mod1(a + b for a, b in zip(x, h)) for h in subgroup)
        cosets.setdefault(key, x)
    glued_vals = sorted(disc_q(lat, x) for x in cosets.values())
    over_vals = _disc_q_values(over)
    assert glued_vals == over_vals, "discriminant form of overlattice does not match H-perp/H"


# --- mod-2 quadratic form on K/2K ----------------------------------------

@dataclass(frozen=True)
class Mod2Form:
    """q(x) = <x,x>/2 and f(x,y) = <x,y> on K/2K, both mod 2.

    ``q_values[mask]`` is q of the class whose set bits select basis vectors;
    the law q(x+y) = q(x) + q(y) + f(x,y) holds throughout.
    """

    dimension: int
    q_values: tuple[int, ...]
    f_matrix: tuple[tuple[int, ...], ...]


def _q2(gram: list[list[int]], mask: int, n: int) -> int:
    total = 0
    bits = [i for i in range(n) if mask >> i & 1]
    for a, i in enumerate(bits):
        total += gram[i][i]
        for j in bits[a + 1 :]:
            total += 2 * gram[i][j]
    return (total // 2) % 2


def mod2_form(lat: Lattice) -> Mod2Form:
    if not is_even(lat):
        raise ValueError("mod-2 quadratic form is defined only for even lattices")
    n = lat.rank
    if n > MOD2_TABLE_MAX_RANK:
        raise ValueError(
            f"exhaustive mod-2 table capped at rank {MOD2_TABLE_MAX_RANK}; use mod2_nullity"
        )
    g = lat.gram_rows()
    q = tuple(_q2(g, mask, n) for mask in range(1 << n))
    f = tuple(tuple(g[i][j] % 2 for j in range(n)) for i in range(n))
    return Mod2Form(dimension=n, q_values=q, f_matrix=f)


def _gf2_kernel(rows: list[int], n: int) -> list[int]:
    """Kernel basis of an n-column GF(2) matrix given as row bitmasks.

    Columns are eliminated while tracking which unit-vector combination
    produced them; combinations that reduce to zero span the kernel.
    """
    basis: list[int] = []
    reduced: list[tuple[int, int]] = []  # (column bitmask, combination), pivot-sorted
    for i in range(n):
        col = 0
        for r, row in enumerate(rows):
            if row >> i & 1:
                col |= 1 << r
        comb = 1 << i
        for rc, rcomb in reduced:
            if col & (rc & -rc):
                col ^= rc
                comb ^= rcomb
        if col:
            reduced.append((col, comb))
            reduced.sort(key=lambda t: t[0] & -t[0])
        else:
            basis.append(comb)
    return basis


def mod2_nullity(lat: Lattice) -> tuple[int, int, list[tuple[int, ...]]]:
    """(nullity, rank, kernel basis) of q on K/2K.

    The kernel is {x in ker f : q(x) = 0}; on ker f the form q is linear, so
    only mod-2 linear algebra is needed and any rank is fine.
    """
    if not is_even(lat):
        raise ValueError("mod-2 quadratic form is defined only for even lattices")
    n = lat.rank
    g = lat.gram_rows()
    f_rows = [sum((g[i][j] % 2) << j for j in range(n)) for i in range(n)]
    ker_f = _gf2_kernel(f_rows, n)
    qvals = [_q2(g, v, n) for v in ker_f]
    if any(qvals):
        # q is linear on ker f; intersect with the hyperplane q = 0
        p = qvals.index(1)
        kernel = [
            v ^ ker_f[p] if qv else v
            for i, (v, qv) in enumerate(zip(ker_f, qvals))
            if i != p
        ]
    else:
        kernel = list(ker_f)
    kernel = sorted(kernel)
    nullity = len(kernel)
    basis = [tuple(v >> i & 1 for i in range(n)) for v in kernel]
    return (nullity, n - nullity, basis)


def _gf2_span(gens: list[int]) -> list[int]:
    span = {0}
    for g in gens:
        span |= {x ^ g for x in span}
    return sorted(span)


def half_overlattice(lat: Lattice, h_gens) -> Lattice:
    """K_H = {x in K (x) Q : 2x in H} for an isotropic H in K/2K.

    ``h_gens`` are 0/1 coefficient vectors.  The result is integral whenever
    H also lies in the kernel of f (true for every subgroup of the q-kernel);
    otherwise a non-integral pairing is reported.  The result need not be
    even: norm -1 vectors are allowed.
    """
    if not is_even(lat):
        raise ValueError("half-integer overlattice requires an even lattice")
    n = lat.rank
    g = lat.gram_rows()
    masks = []
    for h in h_gens:
        if len(h) != n or any(c not in (0, 1) for c in h):
            raise ValueError("H generators must be 0/1 vectors of full rank length")
        masks.append(sum(c << i for i, c in enumerate(h)))
    span = _gf2_span(masks)
    for v in span:
        if _q2(g, v, n) != 0:
            raise ValueError("H is not isotropic for the mod-2 quadratic form")
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    rows += [[v >> i & 1 for i in range(n)] for v in span if v]
    basis = [[Fraction(x, 2) for x in row] for row in exact.hnf_rows(rows)]
    assert len(basis) == n
    gram = _basis_gram(lat, basis)  # raises on non-integral pairing
    out = make_lattice(gram)
    index = len(span)
    if det(out) * index * index != det(lat):
        raise AssertionError("half-overlattice index does not match |H|")
    return out


# --- complements and reflections ------------------------------------------

def orth_complement(lat: Lattice, vectors) -> Lattice:
    """Saturated orthogonal complement of the given rational vectors."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return lat
    g = lat.gram_rows()
    rows = []
    for v in vecs:
        row = [Fraction(sum(Fraction(v[i]) * g[i][j] for i in range(lat.rank))) for j in range(lat.rank)]
        den = 1
        for c in row:
            den = den * c.denominator // gcd(den, c.denominator)
        rows.append([int(c * den) for c in row])
    kernel = exact.int_kernel(rows)
    gram = _basis_gram(lat, [list(b) for b in kernel])
    return make_lattice(gram)


def reflect(lat: Lattice, delta: Vector, x: Vector) -> Vector:
    """s_delta(x) = x + <x, delta> delta for a (-2)-vector delta."""
    if pairing(lat, delta, delta) != -2:
        raise ValueError("reflection vector must have self-pairing -2")
    c = pairing(lat, x, delta)
    return tuple(xi + c * di for xi, di in zip(x, delta))


# --- text format -----------------------------------------------------------

def parse_gram_text(text: str, name: str | None = None) -> Lattice:
    """Gram matrix file: first line "rank N", then N*N whitespace-split integers."""
    tokens = text.split()
    if len(tokens) < 2 or tokens[0] != "rank":
        raise ValueError('gram file must start with "rank N"')
    try:
        n = int(tokens[1])
    except ValueError as e:
        raise ValueError("gram file rank is not an integer") from e
    entries = tokens[2:]
    if len(entries) != n * n:
        raise ValueError(f"expected {n * n} matrix entries, found {len(entries)}")
    try:
        vals = [int(t) for t in entries]
    except ValueError as e:
        raise ValueError("gram file entries must be integers") from e
    g = [vals[i * n : (i + 1) * n] for i in range(n)]
    if not exact.is_symmetric(g):
        raise ValueError("gram matrix in file is not symmetric")
    return make_lattice(g, name)


def load_gram_file(path: str) -> Lattice:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_gram_text(fh.read())
