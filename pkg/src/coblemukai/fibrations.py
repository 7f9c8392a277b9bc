"""Kodaira fiber types, their affine diagrams, and the extremal tables.

The extremal rational elliptic configurations are stored verbatim, one
column per characteristic class (generic means p not in {2,3,5}), plus the
char-3 quasi-elliptic list.  Nothing here is derived from Weierstrass data;
the tables are the ground truth and the only computations are lookups and
the diagram correspondence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .rootgraph import DiagramType, parse_diagram

CHAR_CLASSES = ("generic", "p5", "p3")


@dataclass(frozen=True, order=True)
class KodairaFiber:
    kind: str  # "I", "I*", "II", "II*", "III", "III*", "IV", "IV*"
    index: int = 0  # only I_n (n>=1) and I*_n (n>=0) carry an index

    def __str__(self):
        if self.kind == "I":
            return f"I{self.index}"
        if self.kind == "I*":
            return f"I{self.index}*"
        return self.kind

    def __post_init__(self):
        if self.kind not in ("I", "I*", "II", "II*", "III", "III*", "IV", "IV*"):
            raise ValueError(f"unknown Kodaira kind {self.kind!r}")
        if self.kind == "I" and self.index < 1:
            raise ValueError("I_n requires n >= 1")
        if self.kind == "I*" and self.index < 0:
            raise ValueError("I_n* requires n >= 0")
        if self.kind not in ("I", "I*") and self.index != 0:
            raise ValueError(f"{self.kind} carries no index")


_FIBER_RE = re.compile(r"^(I{1,3}|IV)(\d*)(\*?)$")


def parse_fiber(token: str) -> KodairaFiber:
    m = _FIBER_RE.match(token.strip())
    if not m:
        raise ValueError(f"bad fiber token: {token!r}")
    kind, digits, star = m.groups()
    if digits and kind != "I":
        raise ValueError(f"bad fiber token: {token!r}")
    if kind == "I" and digits:
        return KodairaFiber("I*" if star else "I", int(digits))
    return KodairaFiber(kind + star if star else kind)


def fiber_multiset(tokens) -> tuple[KodairaFiber, ...]:
    return tuple(sorted(parse_fiber(t) for t in tokens))


def diagram_of(fiber: KodairaFiber) -> DiagramType | None:
    """Affine diagram of a reducible fiber; irreducible I1 and II give None."""
    if fiber.kind == "I":
        return DiagramType("A", fiber.index - 1, True) if fiber.index >= 2 else None
    if fiber.kind == "I*":
        return DiagramType("D", fiber.index + 4, True)
    return {
        "II": None,
        "III": DiagramType("A", 1, True),
        "IV": DiagramType("A", 2, True),
        "II*": DiagramType("E", 8, True),
        "III*": DiagramType("E", 7, True),
        "IV*": DiagramType("E", 6, True),
    }[fiber.kind]


def fibers_of(d: DiagramType) -> tuple[KodairaFiber, ...]:
    """Fibers whose diagram is d (inverse of diagram_of)."""
    if not d.affine:
        raise ValueError("only affine diagrams correspond to fibers")
    if d.family == "A":
        if d.index == 1:
            return (KodairaFiber("I", 2), KodairaFiber("III"))
        if d.index == 2:
            return (KodairaFiber("I", 3), KodairaFiber("IV"))
        return (KodairaFiber("I", d.index + 1),)
    if d.family == "D":
        if d.index < 4:
            raise ValueError("affine D needs index >= 4")
        return (KodairaFiber("I*", d.index - 4),)
    return {
        6: (KodairaFiber("IV*"),),
        7: (KodairaFiber("III*"),),
        8: (KodairaFiber("II*"),),
    }[d.index]


def _row(*tokens):
    return fiber_multiset(tokens)


# Extremal rational elliptic fibrations, one tuple of rows per column.
EXTREMAL_GENERIC = (
    _row("II*", "II"),
    _row("III*", "III"),
    _row("IV*", "IV"),
    _row("I0*", "I0*"),
    _row("II*", "I1", "I1"),
    _row("III*", "I2", "I1"),
    _row("IV*", "I3", "I1"),
    _row("I4*", "I1", "I1"),
    _row("I2*", "I2", "I2"),
    _row("I1*", "I4", "I1"),
    _row("I9", "I1", "I1", "I1"),
    _row("I8", "I2", "I1", "I1"),
    _row("I6", "I3", "I2", "I1"),
    _row("I5", "I5", "I1", "I1"),
    _row("I4", "I4", "I2", "I2"),
    _row("I3", "I3", "I3", "I3"),
)

EXTREMAL_P5 = (
    _row("II*", "II"),
    _row("III*", "III"),
    _row("IV*", "IV"),
    _row("I0*", "I0*"),
    _row("II*", "I1", "I1"),
    _row("III*", "I2", "I1"),
    _row("IV*", "I3", "I1"),
    _row("I4*", "I1", "I1"),
    _row("I2*", "I2", "I2"),
    _row("I1*", "I4", "I1"),
    _row("I9", "I1", "I1", "I1"),
    _row("I8", "I2", "I1", "I1"),
    _row("I6", "I3", "I2", "I1"),
    _row("I5", "I5", "II"),
    _row("I4", "I4", "I2", "I2"),
    _row("I3", "I3", "I3", "I3"),
)

# two rows of the p=3 column are gaps ("--"): (IV*, IV) and (I3, I3, I3, I3)
EXTREMAL_P3 = (
    _row("II*"),
    _row("III*", "III"),
    _row("I0*", "I0*"),
    _row("II*", "I1"),
    _row("III*", "I2", "I1"),
    _row("IV*", "I3"),
    _row("I4*", "I1", "I1"),
    _row("I2*", "I2", "I2"),
    _row("I1*", "I4", "I1"),
    _row("I9", "II"),
    _row("I8", "I2", "I1", "I1"),
    _row("I6", "I3", "III"),
    _row("I5", "I5", "I1", "I1"),
    _row("I4", "I4", "I2", "I2"),
)

QUASI_ELLIPTIC_P3 = (
    _row("II*"),
    _row("IV*", "IV"),
    _row("IV", "IV", "IV", "IV"),
)

_COLUMNS = {
    "generic": EXTREMAL_GENERIC,
    "p5": EXTREMAL_P5,
    "p3": EXTREMAL_P3,
}


def extremal_lookup(fibers, char_class: str = "generic") -> bool:
    """True iff the fiber multiset is an extremal configuration in that
    characteristic (for p3, the quasi-elliptic list counts too)."""
    if char_class not in CHAR_CLASSES:
        raise ValueError(f"char class must be one of {CHAR_CLASSES}")
    key = tuple(sorted(fibers))
    if key in _COLUMNS[char_class]:
        return True
    return char_class == "p3" and key in QUASI_ELLIPTIC_P3


MAX_FIBERS = 4  # largest configuration in the tables
_PADDING = (KodairaFiber("I", 1), KodairaFiber("II"))


def admissible_assignments(types, char_class: str = "generic"):
    """Extremal fiber multisets whose reducible part realizes the given
    parabolic type multiset.

    Every component is replaced by one of its fibers, then irreducible
    fibers (I1 or II) are padded in, up to the tables' maximal count.
    """
    if char_class not in CHAR_CLASSES:
        raise ValueError(f"char class must be one of {CHAR_CLASSES}")
    comps = [t if isinstance(t, DiagramType) else parse_diagram(t) for t in types]
    results = set()
    choices = [fibers_of(t) for t in comps]
    for picked in product(*choices):
        base = tuple(sorted(picked))
        room = MAX_FIBERS - len(base)
        if room < 0:
            continue
        for extra in range(room + 1):
            for pad in combinations_with_replacement(_PADDING, extra):
                key = tuple(sorted(base + pad))
                if extremal_lookup(key, char_class):
                    results.add(key)
    return sorted(results)
