import pytest

from coblemukai import fibrations
from coblemukai.fibrations import (
    KodairaFiber,
    admissible_assignments,
    diagram_of,
    extremal_lookup,
    fiber_multiset,
    fibers_of,
    parse_fiber,
)
from coblemukai.rootgraph import DiagramType, parse_diagram


def test_parse_fiber_tokens():
    assert parse_fiber("I6") == KodairaFiber("I", 6)
    assert parse_fiber("I0*") == KodairaFiber("I*", 0)
    assert parse_fiber("II*") == KodairaFiber("II*")
    assert parse_fiber("IV") == KodairaFiber("IV")
    assert str(parse_fiber("I12*")) == "I12*"
    for bad in ("I0", "V", "II**", "IV3", ""):
        with pytest.raises(ValueError):
            parse_fiber(bad)


def test_diagram_of_examples():
    assert diagram_of(parse_fiber("I6")) == DiagramType("A", 5, True)
    assert diagram_of(parse_fiber("II")) is None
    assert diagram_of(parse_fiber("I1")) is None
    assert diagram_of(parse_fiber("I0*")) == DiagramType("D", 4, True)
    assert diagram_of(parse_fiber("II*")) == DiagramType("E", 8, True)
    assert diagram_of(parse_fiber("III")) == DiagramType("A", 1, True)
    assert diagram_of(parse_fiber("IV*")) == DiagramType("E", 6, True)


def test_fibers_of_examples():
    assert set(map(str, fibers_of(parse_diagram("A~2")))) == {"I3", "IV"}
    assert set(map(str, fibers_of(parse_diagram("E~8")))) == {"II*"}
    assert set(map(str, fibers_of(parse_diagram("A~7")))) == {"I8"}
    assert set(map(str, fibers_of(parse_diagram("D~6")))) == {"I2*"}
    with pytest.raises(ValueError):
        fibers_of(parse_diagram("A4"))


def test_roundtrip_consistency():
    fibers = [parse_fiber(t) for t in ("I2", "I3", "I5", "I9", "I0*", "I4*", "III", "III*", "IV", "IV*", "II*")]
    for f in fibers:
        d = diagram_of(f)
        assert d is not None
        assert f in fibers_of(d)


def test_table_row_counts():
    assert len(fibrations.EXTREMAL_GENERIC) == 16
    assert len(fibrations.EXTREMAL_P5) == 16
    assert len(fibrations.EXTREMAL_P3) == 14
    assert len(fibrations.QUASI_ELLIPTIC_P3) == 3


def test_lookup_spot_checks():
    assert extremal_lookup(fiber_multiset(["I5", "I5", "I1", "I1"]), "generic")
    assert extremal_lookup(fiber_multiset(["I5", "I5", "I1", "I1"]), "p3")
    assert not extremal_lookup(fiber_multiset(["I5", "I5", "I1", "I1"]), "p5")
    assert extremal_lookup(fiber_multiset(["I5", "I5", "II"]), "p5")
    assert extremal_lookup(fiber_multiset(["I9", "II"]), "p3")
    assert not extremal_lookup(fiber_multiset(["I9", "II"]), "generic")
    assert not extremal_lookup(fiber_multiset(["I9", "II"]), "p5")
    assert not extremal_lookup(fiber_multiset(["I3", "I3", "I3", "I3"]), "p3")
    assert extremal_lookup(fiber_multiset(["I3", "I3", "I3", "I3"]), "generic")
    assert extremal_lookup(fiber_multiset(["IV", "IV", "IV", "IV"]), "p3")
    assert not extremal_lookup(fiber_multiset(["IV", "IV", "IV", "IV"]), "generic")
    with pytest.raises(ValueError):
        extremal_lookup((), "p7")


def test_table_rows_map_to_small_parabolics():
    for col in (fibrations.EXTREMAL_GENERIC, fibrations.EXTREMAL_P5, fibrations.EXTREMAL_P3):
        for row in col:
            rank = 0
            for f in row:
                d = diagram_of(f)
                if d is not None:
                    rank += d.rank
            assert rank <= 8


def test_admissible_assignments_examples():
    got = admissible_assignments(["A~4", "A~4"], "generic")
    assert fiber_multiset(["I5", "I5", "I1", "I1"]) in got
    got_p3 = admissible_assignments(["E~8"], "p3")
    assert fiber_multiset(["II*", "I1"]) in got_p3
    assert fiber_multiset(["II*"]) in got_p3
    quad = admissible_assignments(["A~2", "A~2", "A~2", "A~2"], "p3")
    assert quad == [fiber_multiset(["IV", "IV", "IV", "IV"])]


def test_admissible_assignments_mi_types_nonempty_at_p3():
    for types in (["A~5", "A~2", "A~1"], ["A~4", "A~4"], ["A~3", "A~3", "A~1", "A~1"], ["A~2", "A~2", "A~2", "A~2"]):
        assert admissible_assignments(types, "p3")
