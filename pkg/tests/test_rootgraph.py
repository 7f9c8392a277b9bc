import random

import pytest

from coblemukai import rootgraph
from coblemukai.rootgraph import (
    DiagramType,
    classify,
    connected_parabolics,
    from_edges,
    maximal_parabolics,
    parse_graph_text,
    span_check,
    span_det,
    vinberg_check,
)


def path_graph(n, name="P"):
    labels = [f"v{i}" for i in range(n)]
    return from_edges(name, labels, [(f"v{i}", f"v{i+1}", 1) for i in range(n - 1)])


def cycle_graph(n, name="C"):
    labels = [f"v{i}" for i in range(n)]
    edges = [(f"v{i}", f"v{(i+1) % n}", 1) for i in range(n)]
    return from_edges(name, labels, edges)


def test_classify_triangle_is_affine_a2():
    g = cycle_graph(3)
    assert classify(g, g.labels) == DiagramType("A", 2, True)


def test_classify_double_edge_pair_is_affine_a1():
    g = from_edges("G", ["a", "b"], [("a", "b", 2)])
    assert classify(g, ["a", "b"]) == DiagramType("A", 1, True)


def test_classify_path4_is_a4():
    g = path_graph(4)
    assert classify(g, g.labels) == DiagramType("A", 4, False)


def test_classify_d_and_e_shapes():
    # D5: path of 3 with two leaves at one end
    g = from_edges(
        "D5",
        ["a", "b", "c", "d", "e"],
        [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("c", "e", 1)],
    )
    assert classify(g, g.labels) == DiagramType("D", 5, False)
    # affine D4: star
    star = from_edges(
        "D4~",
        ["c", "l1", "l2", "l3", "l4"],
        [("c", f"l{i}", 1) for i in range(1, 5)],
    )
    assert classify(star, star.labels) == DiagramType("D", 4, True)
    # affine E6: three legs of length 2
    e6t = from_edges(
        "E6~",
        ["c", "a1", "a2", "b1", "b2", "c1", "c2"],
        [("c", "a1", 1), ("a1", "a2", 1), ("c", "b1", 1), ("b1", "b2", 1), ("c", "c1", 1), ("c1", "c2", 1)],
    )
    assert classify(e6t, e6t.labels) == DiagramType("E", 6, True)


def test_classify_affine_dn_two_forks():
    g = from_edges(
        "D6~",
        ["l1", "l2", "b1", "m", "b2", "r1", "r2"],
        [("l1", "b1", 1), ("l2", "b1", 1), ("b1", "m", 1), ("m", "b2", 1), ("b2", "r1", 1), ("b2", "r2", 1)],
    )
    assert classify(g, g.labels) == DiagramType("D", 6, True)


def test_classify_none_cases():
    # triple edge
    g = from_edges("G", ["a", "b"], [("a", "b", 3)])
    assert classify(g, ["a", "b"]) is None
    # double edge attached to a third vertex
    g2 = from_edges("G", ["a", "b", "c"], [("a", "b", 2), ("b", "c", 1)])
    assert classify(g2, g2.labels) is None
    # cycle with a chord
    g3 = from_edges(
        "G",
        ["a", "b", "c", "d"],
        [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1), ("a", "c", 1)],
    )
    assert classify(g3, g3.labels) is None


def test_classify_rejects_disconnected():
    g = from_edges("G", ["a", "b", "c"], [("a", "b", 1)])
    with pytest.raises(ValueError):
        classify(g, g.labels)


def test_classify_relabel_invariance():
    rng = random.Random(41)
    g = cycle_graph(5)
    for _ in range(10):
        perm = list(range(5))
        rng.shuffle(perm)
        labels = [f"w{i}" for i in range(5)]
        mult = [[g.mult[perm[i]][perm[j]] for j in range(5)] for i in range(5)]
        h = rootgraph.RootGraph(labels, mult)
        assert classify(h, labels) == DiagramType("A", 4, True)


def test_connected_parabolics_on_definite_graph_is_empty():
    assert connected_parabolics(path_graph(2)) == []
    assert connected_parabolics(path_graph(5)) == []


def test_connected_parabolics_simple():
    g = cycle_graph(4)
    cps = connected_parabolics(g)
    assert cps == [(("v0", "v1", "v2", "v3"), DiagramType("A", 3, True))]
    pair = from_edges("G", ["a", "b"], [("a", "b", 2)])
    assert connected_parabolics(pair) == [(("a", "b"), DiagramType("A", 1, True))]


def test_connected_parabolics_rejects_triple_edges():
    g = from_edges("G", ["a", "b"], [("a", "b", 3)])
    with pytest.raises(ValueError):
        connected_parabolics(g)


def test_connected_parabolics_finds_affine_trees():
    # affine D4 star plus a far-away double pair
    g = from_edges(
        "G",
        ["c", "l1", "l2", "l3", "l4", "x", "y"],
        [("c", f"l{i}", 1) for i in range(1, 5)] + [("x", "y", 2)],
    )
    cps = connected_parabolics(g)
    types = sorted(str(t) for _, t in cps)
    assert types == ["A~1", "D~4"]


def test_connected_parabolics_null_vector_positive():
    from fractions import Fraction
    from coblemukai import exact

    g = cycle_graph(6)
    for labels, typ in connected_parabolics(g):
        idx = [g.index(l) for l in labels]
        gram = [[-2 if a == b else g.mult[a][b] for b in idx] for a in idx]
        basis = exact.kernel_basis(gram)
        assert len(basis) == 1
        v = basis[0]
        sign = 1 if v[0] > 0 else -1
        assert all(sign * c > 0 for c in v)


def test_maximal_parabolics_packing():
    # two orthogonal double pairs: {A~1, A~1} is the unique rank-2 packing
    g = from_edges("G", ["a", "b", "c", "d"], [("a", "b", 2), ("c", "d", 2)])
    packs = maximal_parabolics(g, 2)
    assert len(packs) == 1
    assert packs[0].type_multiset() == "A~1+A~1"
    assert len(maximal_parabolics(g, 1)) == 2  # each pair alone
    assert maximal_parabolics(path_graph(3), 4) == []


def test_maximal_parabolics_requires_orthogonality():
    # two double pairs joined by a single edge cannot pack together
    g = from_edges(
        "G",
        ["a", "b", "c", "d"],
        [("a", "b", 2), ("c", "d", 2), ("b", "c", 1)],
    )
    assert maximal_parabolics(g, 2) == []


def test_vinberg_vacuous_pass():
    rep = vinberg_check(path_graph(3), target_rank=1)
    assert rep.passed and rep.witnesses == () and rep.maximal == ()


def test_vinberg_failure_witness():
    # A~1 alone cannot reach rank 2
    g = from_edges("G", ["a", "b"], [("a", "b", 2)])
    rep = vinberg_check(g, target_rank=2)
    assert not rep.passed
    assert rep.witnesses == ((("a", "b"), DiagramType("A", 1, True)),)


def test_span_check_examples():
    one = from_edges("G", ["a"], [])
    assert span_check(one) == (1, (0, 1))
    assert span_check(cycle_graph(3)) == (2, (0, 2))


def test_span_det_examples():
    one = from_edges("G", ["a"], [])
    assert span_det(one) == -2
    a2 = path_graph(2)
    assert span_det(a2) == 3
    # affine pair: rank-1 span generated by a (-2)-root, det -2
    pair = from_edges("G", ["a", "b"], [("a", "b", 2)])
    assert span_det(pair) == -2


def test_automorphisms_k4_double_edges():
    labels = ["a", "b", "c", "d"]
    edges = [(x, y, 2) for i, x in enumerate(labels) for y in labels[i + 1 :]]
    g = from_edges("K4", labels, edges)
    order, gens = rootgraph.automorphisms(g)
    assert order == 24
    for p in gens:
        for i in range(4):
            for j in range(4):
                assert g.mult[i][j] == g.mult[p[i]][p[j]]


def test_automorphisms_cycle():
    order, _ = rootgraph.automorphisms(cycle_graph(5))
    assert order == 10


def test_automorphisms_generators_close_to_order():
    g = cycle_graph(6)
    order, gens = rootgraph.automorphisms(g)
    assert order == 12
    closure = {tuple(range(g.n))}
    frontier = list(closure)
    while frontier:
        x = frontier.pop()
        for q in gens:
            y = tuple(x[q[i]] for i in range(g.n))
            if y not in closure:
                closure.add(y)
                frontier.append(y)
    assert len(closure) == order


def test_export_dot():
    empty = rootgraph.RootGraph([], [], name="G")
    assert rootgraph.export_dot(empty).split() == ['graph', '"G"', "{", "}"]
    pair = from_edges("G", [("a", -2), ("b", -1)], [("a", "b", 2)])
    dot = rootgraph.export_dot(pair)
    assert dot.count('"a" -- "b";') == 2
    assert dot.count("shape=circle") == 1
    assert dot.count("shape=doublecircle") == 1


def test_graph_text_roundtrip():
    g = from_edges("demo", [("a", -2), ("b", -1), ("c", -2)], [("a", "b", 2), ("b", "c", 1)])
    text = rootgraph.format_graph(g)
    assert rootgraph.parse_graph_text(text) == g


def test_graph_text_minimal():
    g = parse_graph_text("graph tiny\nvertex only\n")
    assert g.n == 1 and g.labels == ("only",)


@pytest.mark.parametrize(
    "text,msg",
    [
        ("vertex a\n", "graph"),
        ("graph g\nedge a b 1\n", "undeclared"),
        ("graph g\nvertex a\nedge a a 1\n", "self-loop"),
        ("graph g\nvertex a\nvertex b\nedge a b 1\nedge b a 1\n", "duplicate edge"),
        ("graph g\nvertex a\nvertex b\nedge a b 0\n", ">= 1"),
        ("graph g\nvertex a\nvertex a\n", "duplicate vertex"),
        ("graph g\nvertex a kind=7\n", "bad kind"),
        ("graph g\nfrobnicate\n", "unknown directive"),
    ],
)
def test_graph_text_errors(text, msg):
    with pytest.raises(rootgraph.GraphFormatError, match=msg):
        parse_graph_text(text)


def test_graph_text_comments_ignored():
    text = "# header\ngraph g  # trailing\nvertex a\nvertex b # another\nedge a b 1\n"
    g = parse_graph_text(text)
    assert g.n == 2 and g.mult[0][1] == 1


def test_span_lattice_raw_versus_saturated():
    g = catalog_graph_i()
    from coblemukai import lattice as lat

    raw = rootgraph.span_lattice(g)
    assert lat.det(raw) == -4
    assert rootgraph.span_det(g) == -1


def catalog_graph_i():
    from coblemukai import catalog

    return catalog.build_graph("I")


def test_classify_tolerates_duplicate_labels():
    g = cycle_graph(3)
    assert classify(g, ["v0", "v1", "v2", "v0"]) == DiagramType("A", 2, True)
