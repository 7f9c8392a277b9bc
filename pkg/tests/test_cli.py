import io
import json

import pytest

from coblemukai import cli, rootgraph


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_vinberg_builtin_mi():
    code, out, _ = run(["graph", "vinberg", "builtin:MI"])
    assert code == 0
    assert "pass: true" in out
    for t in ("A~5+A~2+A~1", "A~4+A~4", "A~3+A~3+A~1+A~1", "A~2+A~2+A~2+A~2"):
        assert t in out


def test_lattice_mod2():
    code, out, _ = run(["lattice", "mod2", "A5+A5+A1+A1"])
    assert code == 0
    assert "nullity: 3" in out


def test_lattice_det_json():
    code, out, _ = run(["lattice", "det", "E10", "--json"])
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["det"] == -1
    assert payload["signature"] == [1, 9, 0]


def test_lattice_disc():
    code, out, _ = run(["lattice", "disc", "D8"])
    assert code == 0
    assert "invariant_factors:" in out and "- 2" in out


def test_lattice_overlattice_glue():
    code, out, _ = run(["lattice", "overlattice", "U(2)", "--glue", "1/2,0"])
    assert code == 0
    assert "det: -1" in out


def test_lattice_overlattice_half_kernel():
    code, out, _ = run(["lattice", "overlattice", "A1+A1", "--half-kernel"])
    assert code == 0
    assert "index: 2" in out and "even: false" in out


def test_lattice_overlattice_requires_mode():
    code, _, err = run(["lattice", "overlattice", "A1+A1"])
    assert code == 2
    assert "error:" in err


def test_fiber_lookup_exit_codes():
    code, out, _ = run(["fiber", "lookup", "--char", "p3", "IV", "IV", "IV", "IV"])
    assert code == 0 and "pass: true" in out
    code, out, _ = run(["fiber", "lookup", "--char", "p5", "I5", "I5", "I1", "I1"])
    assert code == 1 and "pass: false" in out


def test_fiber_candidates():
    code, out, _ = run(["fiber", "candidates", "--char", "generic", "A~4+A~4"])
    assert code == 0
    assert "(I5, I5, I1, I1)" in out


def test_graph_dot_output():
    code, out, _ = run(["graph", "dot", "builtin:VI"])
    assert code == 0
    assert out.count("shape=circle") == 10
    assert out.count("shape=doublecircle") == 10


def test_graph_info_file_source(tmp_path):
    p = tmp_path / "pair.graph"
    p.write_text("graph pair\nvertex a\nvertex b\nedge a b 2\n")
    code, out, _ = run(["graph", "info", str(p)])
    assert code == 0
    assert "vertices: 2" in out


def test_graph_parabolics_listing():
    code, out, _ = run(["graph", "parabolics", "builtin:I"])
    assert code == 0
    assert "A~1: c1 c2" in out
    code, out, _ = run(["graph", "parabolics", "builtin:I", "--maximal", "--rank", "8"])
    assert code == 0
    assert "E~8" in out


def test_usage_errors_exit_2():
    assert run(["frobnicate"])[0] == 2
    assert run(["graph", "explode", "builtin:MI"])[0] == 2
    assert run(["lattice", "det", "Q9"])[0] == 2
    assert run(["graph", "info", "/nonexistent/file.graph"])[0] == 2
    assert run(["catalog", "build", "V"])[0] == 2
    assert run([])[0] == 2


def test_catalog_build_roundtrip():
    code, out, _ = run(["catalog", "build", "MII"])
    assert code == 0
    g = rootgraph.parse_graph_text(out)
    assert g.n == 40


def test_catalog_model_output():
    code, out, _ = run(["catalog", "model", "MI"])
    assert code == 0
    assert out.startswith("basis hu hv")


def test_catalog_check_small():
    code, out, _ = run(["catalog", "check", "II", "--json"])
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert report["payload"]["checks"]["span"]["ok"] is True


def test_determinism_across_runs():
    outputs = {run(["catalog", "check", "VI", "--json"])[1] for _ in range(3)}
    assert len(outputs) == 1


def test_catalog_check_vi_includes_block_order():
    code, out, _ = run(["catalog", "check", "VI", "--json"])
    assert code == 0
    checks = json.loads(out)["payload"]["checks"]
    assert checks["block_automorphisms"]["ok"] is True
    assert checks["block_automorphisms"]["order"] == 120


def test_graph_maximal_json_lists_subdiagrams():
    code, out, _ = run(
        ["graph", "parabolics", "builtin:I", "--maximal", "--rank", "8", "--json"]
    )
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["count"] == len(payload["subdiagrams"])
    assert any(any(c.startswith("E~8:") for c in p) for p in payload["subdiagrams"])
