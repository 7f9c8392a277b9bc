"""Built-in dual graphs, blow-up intersection models and the summary table.

The graphs I, II, VI, MI, MII are constructed combinatorially; MI and MII
additionally carry intersection models on a blown-up quadric whose exact
rational bilinear form grounds every edge of the graph.  Types V and VII are
not constructible from the data this package carries (their cross-incidences
live in external references), so they are supported through the generic
graph file loader only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from . import exact, lattice, rootgraph
from .lattice import Lattice
from .rootgraph import KIND_CURVE, KIND_ROOT, RootGraph

BUILTIN_GRAPHS = ("I", "II", "VI", "MI", "MII")
MODEL_NAMES = ("MI", "MII")


# --- combinatorial index sets ------------------------------------------------

def _duads(letters):
    return [frozenset(p) for p in combinations(letters, 2)]


def _synthemes():
    """The 15 partitions of {1..6} into three duads."""
    out = []

    def rec(rest, acc):
        if not rest:
            out.append(tuple(sorted(tuple(sorted(d)) for d in acc)))
            return
        a = min(rest)
        for b in sorted(rest - {a}):
            rec(rest - {a, b}, acc + [(a, b)])

    rec(set(range(1, 7)), [])
    return sorted(out)


def _triads():
    """3-subsets of {1..6} up to complement; the representative contains 1."""
    return [frozenset(t) for t in combinations(range(1, 7), 3) if 1 in t]


def _duad_label(d):
    return "d:" + "".join(str(x) for x in sorted(d))


def _syntheme_label(s):
    return "s:" + ".".join("".join(str(x) for x in d) for d in s)


def _triad_label(t):
    return "t:" + "".join(str(x) for x in sorted(t))


def _is_transversal(triad, syntheme) -> bool:
    return all(len(triad & set(d)) == 1 for d in syntheme)


def build_graph_mi() -> RootGraph:
    duads = sorted(_duads(range(1, 7)), key=_duad_label)
    synthemes = _synthemes()
    triads = sorted(_triads(), key=_triad_label)
    labels = (
        [(_duad_label(d), KIND_CURVE) for d in duads]
        + [(_syntheme_label(s), KIND_CURVE) for s in synthemes]
        + [(_triad_label(t), KIND_ROOT) for t in triads]
    )
    comp = {frozenset(t): frozenset(range(1, 7)) - t for t in triads}
    edges = []
    for a, b in combinations(duads, 2):
        if len(a & b) == 1:
            edges.append((_duad_label(a), _duad_label(b), 1))
    for a, b in combinations(synthemes, 2):
        if not set(a) & set(b):
            edges.append((_syntheme_label(a), _syntheme_label(b), 1))
    for d in duads:
        for s in synthemes:
            if tuple(sorted(d)) in s:
                edges.append((_duad_label(d), _syntheme_label(s), 2))
    for a, b in combinations(triads, 2):
        edges.append((_triad_label(a), _triad_label(b), 2))
    for d in duads:
        for t in triads:
            if d <= t or d <= comp[t]:
                edges.append((_duad_label(d), _triad_label(t), 2))
    for s in synthemes:
        for t in triads:
            if _is_transversal(t, s):
                edges.append((_syntheme_label(s), _triad_label(t), 2))
    return rootgraph.from_edges("MI", labels, edges)


def _perm_label(sigma) -> str:
    seen = set()
    cycles = []
    for start in range(1, 5):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = sigma[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = sigma[x - 1]
        if len(cyc) > 1:
            cycles.append(cyc)
    if not cycles:
        return "p:id"
    return "p:" + "".join("(" + "".join(str(x) for x in c) + ")" for c in cycles)


def _perm_graph_points(sigma):
    return frozenset((i, sigma[i - 1]) for i in range(1, 5))


def build_graph_mii() -> RootGraph:
    grid = [(i, j) for i in range(1, 5) for j in range(1, 5)]
    perms = sorted(permutations(range(1, 5)), key=_perm_label)
    labels = [(f"g:{i}{j}", KIND_ROOT) for i, j in grid]
    labels += [(_perm_label(s), KIND_CURVE) for s in perms]
    edges = []
    for (i, j), (k, l) in combinations(grid, 2):
        if i == k or j == l:
            edges.append((f"g:{i}{j}", f"g:{k}{l}", 1))
    for a, b in combinations(perms, 2):
        common = sum(1 for i in range(4) if a[i] == b[i])
        if common < 2:
            edges.append((_perm_label(a), _perm_label(b), 2 - common))
    for i, j in grid:
        for s in perms:
            if s[i - 1] == j:
                edges.append((f"g:{i}{j}", _perm_label(s), 2))
    return rootgraph.from_edges("MII", labels, edges)


def build_graph_i() -> RootGraph:
    # chain c0 - c1 = c2 = c3 = c4 - c5 with two length-3 single-edge arcs
    # from c0 to c5; the two middle chain vertices are (-1)-roots.
    vertices = [
        ("c0", KIND_CURVE),
        ("c1", KIND_CURVE),
        ("c2", KIND_ROOT),
        ("c3", KIND_ROOT),
        ("c4", KIND_CURVE),
        ("c5", KIND_CURVE),
        ("t1", KIND_CURVE),
        ("t2", KIND_CURVE),
        ("t3", KIND_CURVE),
        ("b1", KIND_CURVE),
        ("b2", KIND_CURVE),
        ("b3", KIND_CURVE),
    ]
    edges = [
        ("c0", "c1", 1),
        ("c1", "c2", 2),
        ("c2", "c3", 2),
        ("c3", "c4", 2),
        ("c4", "c5", 1),
        ("c0", "t1", 1),
        ("t1", "t2", 1),
        ("t2", "t3", 1),
        ("t3", "c5", 1),
        ("c0", "b1", 1),
        ("b1", "b2", 1),
        ("b2", "b3", 1),
        ("b3", "c5", 1),
    ]
    return rootgraph.from_edges("I", vertices, edges)


def build_graph_ii() -> RootGraph:
    # three 4-cycles ("diamonds") linked by three bridges
    vertices = [f"v{i}" for i in range(1, 13)]
    edges = [
        # left diamond v1-v5-v3-v7
        ("v1", "v5", 1),
        ("v5", "v3", 1),
        ("v3", "v7", 1),
        ("v7", "v1", 1),
        # right diamond v2-v6-v4-v8
        ("v2", "v6", 1),
        ("v6", "v4", 1),
        ("v4", "v8", 1),
        ("v8", "v2", 1),
        # top diamond v9-v10-v11-v12
        ("v9", "v10", 1),
        ("v10", "v11", 1),
        ("v11", "v12", 1),
        ("v12", "v9", 1),
        # bridges
        ("v1", "v9", 1),
        ("v2", "v11", 1),
        ("v3", "v4", 1),
    ]
    return rootgraph.from_edges("II", vertices, edges)


def build_graph_vi() -> RootGraph:
    duads = sorted(_duads(range(1, 6)), key=lambda d: tuple(sorted(d)))

    def lab(prefix, d):
        return prefix + ":" + "".join(str(x) for x in sorted(d))

    vertices = [(lab("e", d), KIND_CURVE) for d in duads]
    vertices += [(lab("f", d), KIND_ROOT) for d in duads]
    edges = []
    for a, b in combinations(duads, 2):
        if not a & b:
            edges.append((lab("e", a), lab("e", b), 1))  # Petersen
        if len(a & b) == 1:
            edges.append((lab("f", a), lab("f", b), 1))  # shared boundary
    for d in duads:
        edges.append((lab("e", d), lab("f", d), 2))
    return rootgraph.from_edges("VI", vertices, edges)


def build_graph(name: str) -> RootGraph:
    builders = {
        "I": build_graph_i,
        "II": build_graph_ii,
        "VI": build_graph_vi,
        "MI": build_graph_mi,
        "MII": build_graph_mii,
    }
    if name not in builders:
        raise ValueError(f"unknown built-in graph: {name!r} (have {', '.join(BUILTIN_GRAPHS)})")
    return builders[name]()


def load_graph(path: str) -> RootGraph:
    return rootgraph.load_graph_file(path)


# --- blow-up intersection models ---------------------------------------------

@dataclass(frozen=True)
class BlowupModel:
    """Picard-type lattice of a blown-up quadric with boundary and root classes.

    The ambient basis is two ruling classes (square 0, pairing 1) followed by
    exceptional classes (square -1, mutually orthogonal).  Bidegree (a, b)
    means a*hu + b*hv, so (a, b).(a', b') = ab' + a'b.
    """

    ambient: Lattice
    basis_labels: tuple[str, ...]
    exceptional: tuple[str, ...]
    boundaries: tuple[tuple[str, tuple[Fraction, ...]], ...]
    roots: tuple[tuple[str, tuple[Fraction, ...]], ...]

    def boundary_vectors(self):
        return [v for _, v in self.boundaries]

    def root_map(self):
        return dict(self.roots)

    def __post_init__(self):
        for name, b in self.boundaries:
            if lattice.pairing(self.ambient, b, b) != -4:
                raise ValueError(f"boundary {name} does not have self-pairing -4")
        for name, r in self.roots:
            if lattice.pairing(self.ambient, r, r) != -2:
                raise ValueError(f"root class {name} does not have self-pairing -2")
            for bname, b in self.boundaries:
                if lattice.pairing(self.ambient, r, b) != 0:
                    raise ValueError(f"root class {name} meets boundary {bname}")


def _quadric_ambient(exc_labels) -> tuple[Lattice, tuple[str, ...]]:
    labels = ("hu", "hv") + tuple(exc_labels)
    n = len(labels)
    g = [[0] * n for _ in range(n)]
    g[0][1] = g[1][0] = 1
    for i in range(2, n):
        g[i][i] = -1
    return lattice.make_lattice(g), labels


# points where the two boundary curves of the MI model meet, per printed list:
# each (1,1)-curve, indexed by its duad or syntheme, passes through four of them
MI_CURVE_POINTS = {
    "d:12": (4, 8, 9, 10),
    "d:13": (2, 3, 4, 7),
    "d:14": (1, 2, 5, 8),
    "d:15": (3, 5, 6, 9),
    "d:16": (1, 6, 7, 10),
    "d:23": (1, 4, 5, 6),
    "d:24": (3, 6, 7, 8),
    "d:25": (1, 2, 7, 9),
    "d:26": (2, 3, 5, 10),
    "d:34": (2, 6, 9, 10),
    "d:35": (1, 3, 8, 10),
    "d:36": (5, 7, 8, 9),
    "d:45": (4, 5, 7, 10),
    "d:46": (1, 3, 4, 9),
    "d:56": (2, 4, 6, 8),
    "s:12.34.56": (1, 3, 5, 7),
    "s:12.35.46": (2, 5, 6, 7),
    "s:12.36.45": (1, 2, 3, 6),
    "s:13.24.56": (1, 5, 9, 10),
    "s:13.25.46": (5, 6, 8, 10),
    "s:13.26.45": (1, 6, 8, 9),
    "s:14.23.56": (3, 7, 9, 10),
    "s:14.25.36": (3, 4, 6, 10),
    "s:14.26.35": (4, 6, 7, 9),
    "s:15.23.46": (2, 7, 8, 10),
    "s:15.24.36": (1, 2, 4, 10),
    "s:15.26.34": (1, 4, 7, 8),
    "s:16.23.45": (2, 3, 8, 9),
    "s:16.24.35": (2, 4, 5, 9),
    "s:16.25.34": (3, 4, 5, 8),
}

# triad <-> exceptional curve identification for the ten (-1)-roots
MI_TRIAD_EXC = {
    "t:123": 4,
    "t:124": 8,
    "t:125": 9,
    "t:126": 10,
    "t:134": 2,
    "t:135": 3,
    "t:136": 7,
    "t:145": 5,
    "t:146": 1,
    "t:156": 6,
}


def build_model_mi() -> BlowupModel:
    amb, labels = _quadric_ambient([f"e{i}" for i in range(1, 11)])
    n = amb.rank

    def vec(hu, hv, exc):
        v = [Fraction(0)] * n
        v[0], v[1] = Fraction(hu), Fraction(hv)
        for idx, c in exc:
            v[1 + idx] = Fraction(c)
        return tuple(v)

    b = vec(1, 3, [(i, -1) for i in range(1, 11)])
    bp = vec(3, 1, [(i, -1) for i in range(1, 11)])
    roots = []
    for label, pts in MI_CURVE_POINTS.items():
        roots.append((label, vec(1, 1, [(p, -1) for p in pts])))
    for label, e in MI_TRIAD_EXC.items():
        half = tuple((x + y) / 2 for x, y in zip(b, bp))
        v = list(half)
        v[1 + e] += 2
        roots.append((label, tuple(v)))
    roots.sort()
    return BlowupModel(
        ambient=amb,
        basis_labels=labels,
        exceptional=labels[2:],
        boundaries=(("B", b), ("B'", bp)),
        roots=tuple(roots),
    )


# the 24 bidegree-(1,1) curves of the MII model: coefficients over F3 of
# c00*u0v0 + c01*u0v1 + c10*u1v0 + c11*u1v1, keyed by permutation label
MII_EQUATIONS = {
    "p:id": (0, 1, -1, 0),
    "p:(12)(34)": (1, 0, 0, 1),
    "p:(13)(24)": (1, -1, -1, -1),
    "p:(14)(23)": (1, 1, 1, -1),
    "p:(142)": (1, 1, 0, 1),
    "p:(123)": (1, 0, -1, 1),
    "p:(134)": (1, -1, 1, 0),
    "p:(243)": (0, 1, -1, -1),
    "p:(132)": (1, -1, 0, 1),
    "p:(143)": (1, 1, -1, 0),
    "p:(124)": (1, 0, 1, 1),
    "p:(234)": (0, 1, -1, 1),
    "p:(12)": (1, 0, 0, -1),
    "p:(34)": (0, 1, 1, 0),
    "p:(1423)": (1, 1, -1, 1),
    "p:(1324)": (1, -1, 1, 1),
    "p:(13)": (1, -1, -1, 0),
    "p:(24)": (0, 1, 1, 1),
    "p:(1432)": (1, 1, 0, -1),
    "p:(1234)": (1, 0, 1, -1),
    "p:(14)": (1, 1, 1, 0),
    "p:(23)": (0, 1, 1, -1),
    "p:(1342)": (1, -1, 0, -1),
    "p:(1243)": (1, 0, -1, -1),
}

# F3-rational points of the projective line, in the fixed order p1..p4
MII_F3_POINTS = {1: (1, 0), 2: (0, 1), 3: (1, 1), 4: (1, 2)}


def mii_curve_points(label: str) -> tuple[tuple[int, int], ...]:
    """Grid points on a listed (1,1)-curve, by evaluating its equation over F3."""
    c00, c01, c10, c11 = MII_EQUATIONS[label]
    pts = []
    for i, (u0, u1) in MII_F3_POINTS.items():
        for j, (v0, v1) in MII_F3_POINTS.items():
            if (c00 * u0 * v0 + c01 * u0 * v1 + c10 * u1 * v0 + c11 * u1 * v1) % 3 == 0:
                pts.append((i, j))
    return tuple(pts)


def build_model_mii() -> BlowupModel:
    grid = [(i, j) for i in range(1, 5) for j in range(1, 5)]
    exc = [f"e{i}{j}" for i, j in grid]
    amb, labels = _quadric_ambient(exc)
    n = amb.rank
    pos = {g: 2 + k for k, g in enumerate(grid)}

    def vec(hu, hv, points, coef):
        v = [Fraction(0)] * n
        v[0], v[1] = Fraction(hu), Fraction(hv)
        for p in points:
            v[pos[p]] += Fraction(coef)
        return v

    bs = {i: vec(1, 0, [(i, j) for j in range(1, 5)], -1) for i in range(1, 5)}
    bps = {j: vec(0, 1, [(i, j) for i in range(1, 5)], -1) for j in range(1, 5)}
    boundaries = [(f"B{i}", tuple(bs[i])) for i in range(1, 5)]
    boundaries += [(f"B'{j}", tuple(bps[j])) for j in range(1, 5)]
    roots = []
    for i, j in grid:
        v = [(a + b) / 2 for a, b in zip(bs[i], bps[j])]
        v[pos[(i, j)]] += 2
        roots.append((f"g:{i}{j}", tuple(v)))
    for sigma in permutations(range(1, 5)):
        label = _perm_label(sigma)
        pts = mii_curve_points(label)
        if frozenset(pts) != _perm_graph_points(sigma):
            raise AssertionError(
                f"curve {label}: F3 evaluation gives {sorted(pts)}, "
                f"not the permutation graph"
            )
        roots.append((label, tuple(vec(1, 1, pts, -1))))
    roots.sort()
    return BlowupModel(
        ambient=amb,
        basis_labels=labels,
        exceptional=tuple(exc),
        boundaries=tuple(boundaries),
        roots=tuple(roots),
    )


def build_model(name: str) -> BlowupModel:
    if name == "MI":
        return build_model_mi()
    if name == "MII":
        return build_model_mii()
    raise ValueError(f"no blow-up model for {name!r} (have {', '.join(MODEL_NAMES)})")


# --- Coble-Mukai lattice ------------------------------------------------------

@dataclass(frozen=True)
class CobleMukaiLattice:
    """Orthogonal complement of the boundaries in the half-boundary extension.

    ``basis`` rows are exact rational vectors in ambient coordinates.
    """

    lattice: Lattice
    basis: tuple[tuple[Fraction, ...], ...]

    def contains(self, vec) -> bool:
        coeffs = exact.solve_in_rows([list(b) for b in self.basis], list(vec))
        return coeffs is not None and all(c.denominator == 1 for c in coeffs)


def coble_mukai(model: BlowupModel) -> CobleMukaiLattice:
    amb = model.ambient
    n = amb.rank
    betas = model.boundary_vectors()
    for a, b in combinations(range(len(betas)), 2):
        if lattice.pairing(amb, betas[a], betas[b]) != 0:
            raise ValueError("boundary classes must be pairwise orthogonal")
    if not betas:
        basis = tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))
        return CobleMukaiLattice(lattice=amb, basis=basis)
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    rows += [[int(c) for c in b] for b in betas]  # beta = 2 * (beta/2), scaled like 2*I
    ext_basis = [[Fraction(x, 2) for x in row] for row in exact.hnf_rows(rows)]
    assert len(ext_basis) == n
    g = amb.gram_rows()
    constraints = []
    for b in betas:
        gb = exact.mat_vec(g, b)
        row = [2 * sum(Fraction(e) * Fraction(c) for e, c in zip(ext_basis[j], gb)) for j in range(n)]
        constraints.append([int(x) for x in row])
    kernel = exact.int_kernel(constraints)
    basis = []
    for coeffs in kernel:
        v = [Fraction(0)] * n
        for c, row in zip(coeffs, ext_basis):
            for k in range(n):
                v[k] += c * row[k]
        basis.append(tuple(v))
    gram = [[None] * len(basis) for _ in basis]
    for i in range(len(basis)):
        for j in range(len(basis)):
            val = Fraction(lattice.pairing(amb, basis[i], basis[j]))
            if val.denominator != 1:
                raise ValueError("non-integral Gram: boundaries violate the half-class precondition")
            gram[i][j] = int(val)
    return CobleMukaiLattice(
        lattice=lattice.make_lattice(gram, name=f"CM({model.basis_labels[2][:1]}...)"),
        basis=tuple(basis),
    )


# --- realization verifier ------------------------------------------------------

@dataclass(frozen=True)
class RealizationReport:
    ok: bool
    failures: tuple[str, ...]


def _minus_one_root_decomposition(model: BlowupModel, vec) -> bool:
    """Is vec of the shape 2e + (beta + beta')/2 for an exceptional e?"""
    amb_n = model.ambient.rank
    exc_idx = {lab: model.basis_labels.index(lab) for lab in model.exceptional}
    for (na, ba), (nb, bb) in combinations(model.boundaries, 2):
        half = [(x + y) / 2 for x, y in zip(ba, bb)]
        rest = [v - h for v, h in zip(vec, half)]
        # rest must equal 2 * (a single exceptional basis vector)
        nz = [k for k in range(amb_n) if rest[k] != 0]
        if len(nz) == 1 and rest[nz[0]] == 2 and nz[0] in exc_idx.values():
            return True
    return False


def verify_realization(graph: RootGraph, model: BlowupModel) -> RealizationReport:
    """Check that the model's bilinear form realizes the graph exactly.

    Every vertex must have a class of self-pairing -2 orthogonal to all
    boundaries, the pairing matrix must reproduce the edge multiplicities
    entry for entry, kinds must match the 2e + half-boundaries shape, and
    curve/root pairings must be even.
    """
    failures = []
    rm = model.root_map()
    amb = model.ambient
    for label in graph.labels:
        if label not in rm:
            failures.append(f"missing class for vertex {label}")
    if failures:
        return RealizationReport(ok=False, failures=tuple(failures))
    for label in graph.labels:
        v = rm[label]
        if lattice.pairing(amb, v, v) != -2:
            failures.append(f"{label}: self-pairing != -2")
        for bname, b in model.boundaries:
            if lattice.pairing(amb, v, b) != 0:
                failures.append(f"{label}: not orthogonal to {bname}")
    for i in range(graph.n):
        for j in range(i + 1, graph.n):
            a, b = graph.labels[i], graph.labels[j]
            got = lattice.pairing(amb, rm[a], rm[b])
            if got != graph.mult[i][j]:
                failures.append(f"pair ({a}, {b}): model {got} != graph {graph.mult[i][j]}")
            if graph.kinds[i] != graph.kinds[j] and got % 2 != 0:
                failures.append(f"pair ({a}, {b}): odd curve/root pairing {got}")
    for label, kind in zip(graph.labels, graph.kinds):
        is_half = _minus_one_root_decomposition(model, rm[label])
        if is_half != (kind == KIND_ROOT):
            failures.append(f"{label}: kind tag does not match realization")
    return RealizationReport(ok=not failures, failures=tuple(failures))


# --- R-invariants ---------------------------------------------------------------

@dataclass(frozen=True)
class RInvariant:
    """Root lattice K with an isotropic subgroup H of K/2K (0/1 generators)."""

    k: Lattice
    h_gens: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RInvariantReport:
    ok: bool
    h_rank: int
    nullity: int
    det_k: int
    p_valuation: int | None
    failures: tuple[str, ...]


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def r_invariant_check(
    rinv: RInvariant, p: int | None = None, expect_nullity: int | None = None
) -> RInvariantReport:
    k = rinv.k
    n = k.rank
    g = k.gram_rows()
    masks = []
    for h in rinv.h_gens:
        if len(h) != n or any(c not in (0, 1) for c in h):
            raise ValueError("H generators must be 0/1 vectors matching rank(K)")
        masks.append(sum(c << i for i, c in enumerate(h)))
    span = lattice._gf2_span(masks)
    failures = []
    for v in span:
        if lattice._q2(g, v, n) != 0:
            failures.append(f"H not isotropic at mask {v:b}")
    h_rank = len(span).bit_length() - 1
    nullity, _, _ = lattice.mod2_nullity(k)
    if nullity < h_rank:
        failures.append(f"nullity {nullity} smaller than dim H = {h_rank}")
    if expect_nullity is not None and nullity != expect_nullity:
        failures.append(f"nullity {nullity} != expected {expect_nullity}")
    det_k = lattice.det(k)
    val = _valuation(abs(det_k), p) if p is not None else None
    return RInvariantReport(
        ok=not failures,
        h_rank=h_rank,
        nullity=nullity,
        det_k=det_k,
        p_valuation=val,
        failures=tuple(failures),
    )


def q_kernel_invariant(k_spec: str) -> RInvariant:
    """RInvariant with H = the full kernel of q on K/2K (the canonical glue)."""
    k = lattice.make_named(k_spec)
    _, _, basis = lattice.mod2_nullity(k)
    return RInvariant(k=k, h_gens=tuple(tuple(v) for v in basis))


# --- summary table ---------------------------------------------------------------------

@dataclass(frozen=True)
class Table1Row:
    key: str
    type: str
    p: str
    n: int
    k: int
    aut: str
    aut_order: int
    k_spec: str
    h_rank: int

    @property
    def r_invariant(self) -> str:
        if self.h_rank == 0:
            return f"({self.k_spec}, {{0}})"
        return f"({self.k_spec}, (Z/2)^{self.h_rank})"


_TABLE1 = (
    Table1Row("I-1", "I", "any", 1, 12, "D8", 8, "E8+A1", 0),
    Table1Row("I-2", "I", "any", 2, 12, "D8", 8, "E8+A1+A1", 1),
    Table1Row("II", "II", "any", 1, 12, "S4", 24, "D9", 0),
    Table1Row("V", "V", "3", 2, 20, "S4 x Z/2", 48, "E7+A2+A1+A1", 2),
    Table1Row("VI-5", "VI", "5", 1, 20, "S5", 120, "E6+A4", 0),
    Table1Row("VI-3", "VI", "3", 5, 20, "S5", 120, "E6+D5", 1),
    Table1Row("VII", "VII", "5", 1, 20, "S5", 120, "A9+A1", 1),
    Table1Row("MI", "MI", "3", 2, 40, "Aut(S6)", 1440, "A5+A5+A1+A1", 3),
    Table1Row("MII", "MII", "3", 8, 40, "(S4 x S4).Z/2", 1152, "D8+A2+A2", 2),
)

_TABLE1_ALIASES = {
    "I(n=1)": "I-1",
    "I(n=2)": "I-2",
    "VI(p=5)": "VI-5",
    "VI(p=3)": "VI-3",
}

TABLE1_KEYS = tuple(row.key for row in _TABLE1)


def table1(key: str) -> Table1Row:
    key = _TABLE1_ALIASES.get(key, key)
    for row in _TABLE1:
        if row.key == key:
            return row
    raise ValueError(f"unknown table row: {key!r} (have {', '.join(TABLE1_KEYS)})")


# built-in graph name -> the table row its kind decoration realizes
GRAPH_TABLE_ROW = {"I": "I-2", "II": "II", "VI": "VI-3", "MI": "MI", "MII": "MII"}

# graph automorphism orders equal to Aut(S) where the source states the match
CLAIMED_GRAPH_AUT = {"MI": 1440, "MII": 1152}

# induced sub-blocks with independently known automorphism orders
CLAIMED_BLOCK_AUT = {"VI": ("e:", 120)}  # the Petersen part


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: RootGraph
    model: BlowupModel | None
    row: Table1Row


def get_entry(name: str) -> CatalogEntry:
    graph = build_graph(name)
    model = build_model(name) if name in MODEL_NAMES else None
    return CatalogEntry(name=name, graph=graph, model=model, row=table1(GRAPH_TABLE_ROW[name]))


# --- model text export ------------------------------------------------------------

def format_model(model: BlowupModel) -> str:
    lines = ["basis " + " ".join(model.basis_labels)]
    for name, v in model.boundaries:
        lines.append(f"boundary {name} " + " ".join(str(c) for c in v))
    for name, v in model.roots:
        lines.append(f"root {name} " + " ".join(str(c) for c in v))
    return "\n".join(lines) + "\n"
