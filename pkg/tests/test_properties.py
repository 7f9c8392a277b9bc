"""Property-based checks for the algebraic laws the modules promise."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from coblemukai import lattice, rootgraph
from coblemukai.lattice import make_named

NAMES = ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8", "U"]


@given(st.lists(st.sampled_from(NAMES), min_size=1, max_size=3))
def test_disc_group_order_equals_abs_det(parts):
    lat = make_named("+".join(parts))
    assert lattice.discriminant_group(lat).order == abs(lattice.det(lat))


@given(st.sampled_from(NAMES), st.sampled_from(NAMES))
def test_det_multiplicative(a, b):
    assert lattice.det(make_named(f"{a}+{b}")) == lattice.det(make_named(a)) * lattice.det(
        make_named(b)
    )


@given(st.permutations(list(range(6))))
def test_classify_is_relabel_invariant(perm):
    # a 6-cycle stays affine A~5 under any vertex relabeling
    n = 6
    base = [[0] * n for _ in range(n)]
    for i in range(n):
        base[i][(i + 1) % n] = base[(i + 1) % n][i] = 1
    mult = [[base[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    g = rootgraph.RootGraph([f"v{i}" for i in range(n)], mult)
    assert rootgraph.classify(g, g.labels) == rootgraph.DiagramType("A", 5, True)


@given(
    st.integers(min_value=2, max_value=9),
    st.lists(st.integers(min_value=-3, max_value=3), min_size=10, max_size=10),
)
@settings(max_examples=50)
def test_reflect_preserves_pairings(root_idx, coords):
    lat = make_named("E10")
    delta = tuple(1 if i == root_idx else 0 for i in range(10))
    assert lattice.pairing(lat, delta, delta) == -2
    x = tuple(coords)
    rx = lattice.reflect(lat, delta, x)
    assert lattice.reflect(lat, delta, rx) == x
    assert lattice.pairing(lat, rx, rx) == lattice.pairing(lat, x, x)


@given(st.lists(st.sampled_from(["A1", "A2", "A3", "D4", "E6"]), min_size=1, max_size=2))
@settings(max_examples=30)
def test_mod2_law_on_random_sums(parts):
    lat = make_named("+".join(parts))
    form = lattice.mod2_form(lat)
    n = form.dimension
    for x in range(min(1 << n, 64)):
        for y in range(min(1 << n, 64)):
            f = sum(
                form.f_matrix[i][j]
                for i in range(n)
                if x >> i & 1
                for j in range(n)
                if y >> j & 1
            )
            assert form.q_values[x ^ y] == (form.q_values[x] + form.q_values[y] + f) % 2
