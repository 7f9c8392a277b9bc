"""Root graphs of (-2)-roots and their subdiagram combinatorics.

Vertices are roots of self-pairing -2; an m-tuple edge means the two roots
pair to m.  The Gram matrix of a graph therefore has -2 on the diagonal and
the edge multiplicities off it.  On top of that sit the induced-subdiagram
classifier (ADE / affine ADE), the enumeration of connected and maximal
parabolic subdiagrams, Vinberg's finite-index criterion, exact graph
automorphism groups, and a small text format plus DOT export.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import exact

KIND_CURVE = -2
KIND_ROOT = -1


class GraphFormatError(ValueError):
    pass


class RootGraph:
    """Immutable labeled graph with non-negative integer edge multiplicities."""

    def __init__(self, labels, mult, kinds=None, name: str = "G"):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be unique")
        n = len(labels)
        mult = tuple(tuple(int(x) for x in row) for row in mult)
        if len(mult) != n or any(len(row) != n for row in mult):
            raise ValueError("multiplicity matrix shape does not match vertex count")
        for i in range(n):
            if mult[i][i] != 0:
                raise ValueError("multiplicity matrix must have zero diagonal")
            for j in range(n):
                if mult[i][j] != mult[j][i]:
                    raise ValueError("multiplicity matrix must be symmetric")
                if mult[i][j] < 0:
                    raise ValueError("edge multiplicities must be non-negative")
        if kinds is None:
            kinds = (KIND_CURVE,) * n
        else:
            kinds = tuple(int(k) for k in kinds)
            if len(kinds) != n or any(k not in (KIND_CURVE, KIND_ROOT) for k in kinds):
                raise ValueError("vertex kinds must be -2 (curve) or -1 (root)")
        self.labels = labels
        self.kinds = kinds
        self.mult = mult
        self.name = name
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown vertex label: {label!r}") from None

    def edge_count(self) -> int:
        return sum(
            1 for i in range(self.n) for j in range(i + 1, self.n) if self.mult[i][j]
        )

    def gram_rows(self) -> list[list[int]]:
        return [
            [-2 if i == j else self.mult[i][j] for j in range(self.n)]
            for i in range(self.n)
        ]

    def induced(self, labels) -> "RootGraph":
        idx = [self.index(l) for l in labels]
        return RootGraph(
            labels=[self.labels[i] for i in idx],
            mult=[[self.mult[i][j] for j in idx] for i in idx],
            kinds=[self.kinds[i] for i in idx],
            name=self.name,
        )

    def __eq__(self, other):
        return (
            isinstance(other, RootGraph)
            and self.name == other.name
            and self.labels == other.labels
            and self.kinds == other.kinds
            and self.mult == other.mult
        )

    def __repr__(self):
        return f"RootGraph({self.name!r}, {self.n} vertices, {self.edge_count()} edges)"


def from_edges(name, vertices, edges) -> RootGraph:
    """Build a graph from (label, kind) pairs or bare labels plus (a, b, mult) edges."""
    labels = []
    kinds = []
    for v in vertices:
        if isinstance(v, str):
            labels.append(v)
            kinds.append(KIND_CURVE)
        else:
            labels.append(v[0])
            kinds.append(v[1])
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    mult = [[0] * n for _ in range(n)]
    for a, b, m in edges:
        i, j = index[a], index[b]
        if i == j:
            raise ValueError(f"self-loop at {a!r}")
        if mult[i][j]:
            raise ValueError(f"duplicate edge {a!r} -- {b!r}")
        mult[i][j] = mult[j][i] = int(m)
    return RootGraph(labels, mult, kinds, name)


# --- diagram types ---------------------------------------------------------

@dataclass(frozen=True, order=True)
class DiagramType:
    family: str  # "A", "D" or "E"
    index: int
    affine: bool

    def __str__(self):
        return f"{self.family}~{self.index}" if self.affine else f"{self.family}{self.index}"

    @property
    def rank(self) -> int:
        return self.index

    @property
    def vertex_count(self) -> int:
        return self.index + 1 if self.affine else self.index


def parse_diagram(token: str) -> DiagramType:
    t = token.strip()
    affine = "~" in t
    t = t.replace("~", "")
    if len(t) < 2 or t[0] not in "ADE" or not t[1:].isdigit():
        raise ValueError(f"bad diagram token: {token!r}")
    return DiagramType(family=t[0], index=int(t[1:]), affine=affine)


def _type_sort_key(t: DiagramType):
    return (-t.index, t.family, t.affine)


def multiset_str(types) -> str:
    return "+".join(str(t) for t in sorted(types, key=_type_sort_key))


# --- shape classification ---------------------------------------------------

def _classify_tree(members, adj):
    """Classify a single-edged tree; returns (is_affine, DiagramType) or None.

    ``adj[v]`` lists the neighbors of v inside the subset.  The shape rules
    are the standard ADE/affine-ADE tree catalogue; anything else is
    indefinite.
    """
    n = len(members)
    deg = {v: len(adj[v]) for v in members}
    branch = [v for v in members if deg[v] >= 3]
    if not branch:
        return (False, DiagramType("A", n, False))
    if len(branch) == 1:
        b = branch[0]
        legs = []
        for start in adj[b]:
            length = 1
            prev, cur = b, start
            while deg[cur] == 2:
                nxt = next(u for u in adj[cur] if u != prev)
                prev, cur = cur, nxt
                length += 1
            legs.append(length)
        legs.sort()
        if deg[b] == 3:
            a, c, d = legs
            if a == 1 and c == 1:
                return (False, DiagramType("D", n, False))
            if legs == [1, 2, 2]:
                return (False, DiagramType("E", 6, False))
            if legs == [1, 2, 3]:
                return (False, DiagramType("E", 7, False))
            if legs == [1, 2, 4]:
                return (False, DiagramType("E", 8, False))
            if legs == [2, 2, 2]:
                return (True, DiagramType("E", 6, True))
            if legs == [1, 3, 3]:
                return (True, DiagramType("E", 7, True))
            if legs == [1, 2, 5]:
                return (True, DiagramType("E", 8, True))
            return None
        if deg[b] == 4 and legs == [1, 1, 1, 1]:
            return (True, DiagramType("D", 4, True))
        return None
    if len(branch) == 2:
        b1, b2 = branch
        if deg[b1] != 3 or deg[b2] != 3:
            return None
        leaves = [v for v in members if deg[v] == 1]
        if len(leaves) != 4:
            return None
        for leaf in leaves:
            if adj[leaf][0] not in branch:
                return None
        return (True, DiagramType("D", n - 1, True))
    return None


def _classify_indices(g: RootGraph, idx: list[int]):
    """(is_affine, DiagramType) for a connected induced subset, or None."""
    k = len(idx)
    pair_mults = [
        (g.mult[a][b], a, b) for ai, a in enumerate(idx) for b in idx[ai + 1 :]
    ]
    # connectivity under any positive multiplicity
    conn = {v: [] for v in idx}
    for m, a, b in pair_mults:
        if m:
            conn[a].append(b)
            conn[b].append(a)
    seen = {idx[0]}
    stack = [idx[0]]
    while stack:
        v = stack.pop()
        for u in conn[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != k:
        raise ValueError("subset does not induce a connected subgraph")
    if any(m >= 3 for m, _, _ in pair_mults):
        return None
    if any(m == 2 for m, _, _ in pair_mults):
        if k == 2:
            return (True, DiagramType("A", 1, True))
        return None
    adj = {v: [] for v in idx}
    edges = 0
    for m, a, b in pair_mults:
        if m == 1:
            adj[a].append(b)
            adj[b].append(a)
            edges += 1
    if edges == k - 1:
        return _classify_tree(idx, adj)
    if edges == k and all(len(adj[v]) == 2 for v in idx):
        return (True, DiagramType("A", k - 1, True))
    return None


def classify(g: RootGraph, subset) -> DiagramType | None:
    """Classify a connected induced subdiagram as definite ADE, affine, or none.

    The shape rules are cross-checked against the exact inertia of the
    induced Gram matrix; a mismatch would mean a corrupt classifier and is
    asserted away rather than returned.
    """
    idx = sorted({g.index(l) for l in subset})
    if not idx:
        raise ValueError("empty subset")
    got = _classify_indices(g, idx)
    gram = [[-2 if i == j else g.mult[i][j] for j in idx] for i in idx]
    pos, neg, zero = exact.rank_signature(gram)
    if got is None:
        assert pos > 0 or zero >= 2, "unrecognized negative semidefinite diagram"
        return None
    affine, typ = got
    if affine:
        assert (pos, neg, zero) == (0, len(idx) - 1, 1), f"bad affine shape {typ}"
    else:
        assert (pos, neg, zero) == (0, len(idx), 0), f"bad definite shape {typ}"
    return typ


# --- connected parabolic enumeration ----------------------------------------

def _check_mult_bound(g: RootGraph):
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.mult[i][j] >= 3:
                raise ValueError(
                    "edge multiplicity >= 3: Vinberg's criterion hypothesis fails"
                )


def _adjacency_masks(g: RootGraph):
    single = [0] * g.n
    double = [0] * g.n
    for i in range(g.n):
        for j in range(g.n):
            if g.mult[i][j] == 1:
                single[i] |= 1 << j
            elif g.mult[i][j] == 2:
                double[i] |= 1 << j
    both = [s | d for s, d in zip(single, double)]
    return single, double, both


def connected_parabolics(g: RootGraph, max_rank: int | None = None):
    """All connected affine subdiagrams, as (sorted labels, DiagramType) pairs.

    Grows connected induced subsets (each visited exactly once) and prunes as
    soon as a subset stops being a definite ADE diagram: proper connected
    induced subsets of affine diagrams are definite, so nothing is missed.
    """
    _check_mult_bound(g)
    n = g.n
    single, double, both = _adjacency_masks(g)
    max_size = n if max_rank is None else min(n, max_rank + 1)
    found: list[tuple[int, DiagramType]] = []

    def tree_or_cycle(members, mask, v):
        # members: current definite subset (single edges only); v: new vertex
        if double[v] & mask:
            if len(members) == 1 and double[v] & mask == mask:
                return (True, DiagramType("A", 1, True))
            return None
        new = members + [v]
        adj = {u: [] for u in new}
        for ai, a in enumerate(new):
            for b in new[ai + 1 :]:
                if single[a] >> b & 1:
                    adj[a].append(b)
                    adj[b].append(a)
        k = len(new)
        edges = sum(len(adj[u]) for u in new) // 2
        if edges == k - 1:
            return _classify_tree(new, adj)
        if edges == k and all(len(adj[u]) == 2 for u in new):
            return (True, DiagramType("A", k - 1, True))
        return None

    def extend(members, mask, ext, nbhd):
        queue = list(ext)
        while queue:
            v = queue.pop(0)
            size = len(members) + 1
            if size > max_size:
                continue
            got = tree_or_cycle(members, mask, v)
            if got is None:
                continue
            affine, typ = got
            if affine:
                found.append((mask | 1 << v, typ))
                continue
            if size == max_size:
                continue
            fresh = both[v] & ~nbhd & ~(mask | 1 << v)
            fresh &= ~((1 << (members[0] + 1)) - 1)  # only vertices > root
            add = [u for u in range(n) if fresh >> u & 1]
            extend(members + [v], mask | 1 << v, queue + add, nbhd | both[v])

    for root in range(n):
        ext0 = [u for u in range(root + 1, n) if both[root] >> u & 1]
        extend([root], 1 << root, ext0, both[root])

    out = []
    for mask, typ in found:
        labels = tuple(sorted(g.labels[i] for i in range(n) if mask >> i & 1))
        out.append((labels, typ))
    out.sort()
    # sanity: every recorded component really is corank-1 negative semidefinite
    for labels, typ in out:
        idx = [g.index(l) for l in labels]
        gram = [[-2 if a == b else g.mult[a][b] for b in idx] for a in idx]
        assert exact.rank_signature(gram) == (0, len(idx) - 1, 1), (
            f"component {labels} misclassified as {typ}"
        )
    return out


# --- parabolic subdiagrams and Vinberg ---------------------------------------

@dataclass(frozen=True)
class ParabolicSubdiagram:
    """Disjoint orthogonal union of connected affine diagrams."""

    components: tuple[tuple[tuple[str, ...], DiagramType], ...]
    rank: int

    def type_multiset(self) -> str:
        return multiset_str([t for _, t in self.components])


def _candidate_masks(g: RootGraph, cps):
    _, _, both = _adjacency_masks(g)
    masks = []
    closed = []
    for labels, _ in cps:
        m = 0
        for l in labels:
            m |= 1 << g.index(l)
        c = m
        for i in range(g.n):
            if m >> i & 1:
                c |= both[i]
        masks.append(m)
        closed.append(c)
    return masks, closed


def maximal_parabolics(g: RootGraph, target_rank: int):
    """All parabolic subdiagrams of rank exactly target_rank.

    Exact backtracking packing of the connected parabolics; components must
    be pairwise disjoint and orthogonal.  Output is deduplicated and sorted
    by component label lists.
    """
    cps = [c for c in connected_parabolics(g, max_rank=target_rank)]
    masks, closed = _candidate_masks(g, cps)
    k = len(cps)
    compat = []
    for i in range(k):
        m = 0
        for j in range(k):
            if i != j and closed[i] & masks[j] == 0:
                m |= 1 << j
        compat.append(m)
    ranks = [t.rank for _, t in cps]
    results: list[ParabolicSubdiagram] = []

    def dfs(start: int, chosen: list[int], allowed: int, total: int):
        if total == target_rank:
            comps = tuple(sorted(cps[i] for i in chosen))
            results.append(ParabolicSubdiagram(components=comps, rank=target_rank))
            return
        rest = allowed >> start << start
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            if total + ranks[i] <= target_rank:
                dfs(i + 1, chosen + [i], allowed & compat[i], total + ranks[i])

    dfs(0, [], (1 << k) - 1, 0)
    results.sort(key=lambda p: p.components)
    return results


@dataclass(frozen=True)
class VinbergReport:
    passed: bool
    target_rank: int
    witnesses: tuple  # connected parabolics that extend to no maximal one
    maximal: tuple  # the rank-target parabolic subdiagrams

    def type_multisets(self) -> tuple[str, ...]:
        return tuple(sorted({p.type_multiset() for p in self.maximal}))


def vinberg_check(g: RootGraph, target_rank: int | None = None) -> VinbergReport:
    """Finite-index criterion: every connected parabolic subdiagram must be a
    component of some parabolic subdiagram of the maximal rank."""
    if target_rank is None:
        rank, _ = span_check(g)
        target_rank = rank - 2
    cps = connected_parabolics(g)
    packs = maximal_parabolics(g, target_rank)
    used = {comp for p in packs for comp in p.components}
    witnesses = tuple(c for c in cps if c not in used)
    return VinbergReport(
        passed=not witnesses,
        target_rank=target_rank,
        witnesses=witnesses,
        maximal=tuple(packs),
    )


def span_check(g: RootGraph) -> tuple[int, tuple[int, int]]:
    """Rank and signature of the span of the roots under the graph Gram."""
    pos, neg, _ = exact.rank_signature(g.gram_rows())
    return (pos + neg, (pos, neg))


def span_lattice(g: RootGraph):
    """The lattice generated by the roots, modulo its radical.

    Congruence by the SNF right transform splits off the radical exactly;
    the leading block is the Gram matrix of the span.
    """
    from . import lattice as _lat

    gram = g.gram_rows()
    res = exact.snf(gram)
    r = res.rank
    if r == 0:
        raise ValueError("graph Gram has zero rank")
    v = [list(row) for row in res.right]
    m = exact.matmul(exact.matmul(exact.transpose(v), gram), v)
    for i in range(g.n):
        for j in range(g.n):
            if (i >= r or j >= r) and m[i][j] != 0:
                raise AssertionError("radical split failed")
    return _lat.make_lattice([row[:r] for row in m[:r]])


_SATURATE_MAX_DISC = 4096
_SATURATE_MAX_ISOTROPIC = 32


def span_det(g: RootGraph) -> int:
    """Determinant of the saturated lattice generated by the roots.

    The raw span can sit at finite index inside the ambient lattice (multiple
    fibers halve some isotropic classes there), so the span is saturated by
    gluing a maximal isotropic subgroup of its discriminant form; that is the
    largest even lattice the roots can generate in any ambient.
    """
    from . import lattice as _lat

    span = span_lattice(g)
    d = _lat.det(span)
    if abs(d) == 1:
        return d
    if abs(d) > _SATURATE_MAX_DISC:
        raise ValueError("discriminant too large to saturate exactly")
    disc = _lat.discriminant_group(span)
    elems = sorted(_lat._coset_span(span, disc.generator_lifts))
    iso = [x for x in elems if any(x) and _lat.disc_q(span, x) == 0]
    if len(iso) > _SATURATE_MAX_ISOTROPIC:
        raise ValueError("too many isotropic classes to saturate exactly")
    best_gens: list = []
    best_order = 1

    def dfs(start: int, gens: list, order: int):
        nonlocal best_gens, best_order
        if order > best_order:
            best_order = order
            best_gens = list(gens)
        for i in range(start, len(iso)):
            cand = gens + [iso[i]]
            sub = _lat._coset_span(span, cand)
            if len(sub) > order and all(_lat.disc_q(span, h) == 0 for h in sub):
                dfs(i + 1, cand, len(sub))

    dfs(0, [], 1)
    if best_order == 1:
        return d
    return _lat.det(_lat.overlattice(span, best_gens))


# --- automorphisms ----------------------------------------------------------

def _refine_colors(g: RootGraph):
    n = g.n
    colors = [0] * n
    while True:
        sigs = []
        for v in range(n):
            nb = sorted((g.mult[v][u], colors[u]) for u in range(n) if g.mult[v][u])
            sigs.append((colors[v], tuple(nb)))
        palette = {s: c for c, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def automorphisms(g: RootGraph):
    """(order, generators) of the multiplicity-preserving automorphism group.

    Kind tags are ignored.  All automorphisms are enumerated by color-refined
    backtracking (exact and fine at desk scale), then greedily thinned to a
    small generating set whose closure is re-verified.
    """
    n = g.n
    if n == 0:
        return (1, [])
    colors = _refine_colors(g)
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    # Assignment order matters a lot: each new vertex should be as constrained
    # as possible by the ones already placed.  Every edge into the assigned
    # prefix constrains the candidates, and so does a non-edge to an assigned
    # vertex of the same color, so both count toward the greedy score.
    single_deg = [sum(1 for u in range(n) if g.mult[v][u] == 1) for v in range(n)]
    order_of_assignment: list[int] = []
    placed = [False] * n
    while len(order_of_assignment) < n:
        best = None
        for v in range(n):
            if placed[v]:
                continue
            score = sum(
                1
                for u in order_of_assignment
                if g.mult[v][u] or colors[u] == colors[v]
            )
            key = (score, single_deg[v], -len(by_color[colors[v]]), -v)
            if best is None or key > best[0]:
                best = (key, v)
        order_of_assignment.append(best[1])
        placed[best[1]] = True
    autos: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    mult = g.mult

    def assign(k: int):
        if k == n:
            autos.append(tuple(image))
            return
        v = order_of_assignment[k]
        row_v = mult[v]
        for u in by_color[colors[v]]:
            if used[u]:
                continue
            row_u = mult[u]
            ok = True
            for i in range(k):
                prev = order_of_assignment[i]
                if row_v[prev] != row_u[image[prev]]:
                    ok = False
                    break
            if ok:
                image[v] = u
                used[u] = True
                assign(k + 1)
                used[u] = False
                image[v] = -1

    assign(0)
    autos.sort()
    identity = tuple(range(n))
    gens: list[tuple[int, ...]] = []
    closure = {identity}
    for p in autos:
        if p not in closure:
            gens.append(p)
            frontier = list(closure)
            while frontier:
                x = frontier.pop()
                for q in gens:
                    y = tuple(x[q[i]] for i in range(n))
                    if y not in closure:
                        closure.add(y)
                        frontier.append(y)
    assert len(closure) == len(autos)
    return (len(autos), gens)


# --- text format and DOT -----------------------------------------------------

def parse_graph_text(text: str) -> RootGraph:
    """Parse the line-based graph format.

    UTF-8 lines; "#" starts a comment; ``graph <name>`` then ``vertex <label>
    [kind=-1|-2]`` and ``edge <a> <b> <mult>`` with mult >= 1.  Declaration
    order fixes the canonical vertex order; duplicate edges are errors.
    """
    name = None
    labels: list[str] = []
    kinds: list[int] = []
    edges: list[tuple[str, str, int]] = []
    seen_pairs = set()
    declared = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph":
            if name is not None:
                raise GraphFormatError(f"line {lineno}: duplicate graph declaration")
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'graph <name>'")
            name = parts[1]
        elif parts[0] == "vertex":
            if name is None:
                raise GraphFormatError(f"line {lineno}: vertex before graph declaration")
            if len(parts) not in (2, 3):
                raise GraphFormatError(f"line {lineno}: expected 'vertex <label> [kind=-1|-2]'")
            label = parts[1]
            if label in declared:
                raise GraphFormatError(f"line {lineno}: duplicate vertex {label!r}")
            kind = KIND_CURVE
            if len(parts) == 3:
                if parts[2] == "kind=-1":
                    kind = KIND_ROOT
                elif parts[2] == "kind=-2":
                    kind = KIND_CURVE
                else:
                    raise GraphFormatError(f"line {lineno}: bad kind {parts[2]!r}")
            declared.add(label)
            labels.append(label)
            kinds.append(kind)
        elif parts[0] == "edge":
            if len(parts) != 4:
                raise GraphFormatError(f"line {lineno}: expected 'edge <a> <b> <mult>'")
            a, b, m = parts[1], parts[2], parts[3]
            if a not in declared or b not in declared:
                raise GraphFormatError(f"line {lineno}: edge uses undeclared vertex")
            if a == b:
                raise GraphFormatError(f"line {lineno}: self-loop at {a!r}")
            try:
                mval = int(m)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: multiplicity must be an integer") from None
            if mval < 1:
                raise GraphFormatError(f"line {lineno}: multiplicity must be >= 1")
            key = frozenset((a, b))
            if key in seen_pairs:
                raise GraphFormatError(f"line {lineno}: duplicate edge {a!r} -- {b!r}")
            seen_pairs.add(key)
            edges.append((a, b, mval))
        else:
            raise GraphFormatError(f"line {lineno}: unknown directive {parts[0]!r}")
    if name is None:
        raise GraphFormatError("missing graph declaration")
    return from_edges(name, list(zip(labels, kinds)), edges)


def format_graph(g: RootGraph) -> str:
    lines = [f"graph {g.name}"]
    for label, kind in zip(g.labels, g.kinds):
        lines.append(f"vertex {label} kind=-1" if kind == KIND_ROOT else f"vertex {label}")
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.mult[i][j]:
                lines.append(f"edge {g.labels[i]} {g.labels[j]} {g.mult[i][j]}")
    return "\n".join(lines) + "\n"


def load_graph_file(path: str) -> RootGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def export_dot(g: RootGraph) -> str:
    """DOT text; multiplicity-m edges become m parallel edge statements and
    the vertex kind picks the node shape (curve: circle, root: doublecircle)."""
    out = [f'graph "{g.name}" {{']
    for label, kind in zip(g.labels, g.kinds):
        shape = "doublecircle" if kind == KIND_ROOT else "circle"
        out.append(f'  "{label}" [shape={shape}];')
    for i in range(g.n):
        for j in range(i + 1, g.n):
            for _ in range(g.mult[i][j]):
                out.append(f'  "{g.labels[i]}" -- "{g.labels[j]}";')
    out.append("}")
    return "\n".join(out) + "\n"
