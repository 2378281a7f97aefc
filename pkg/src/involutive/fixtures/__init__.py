"""Benchmark inputs: leading monomials of degree-reverse-lexicographic
Groebner bases of classical polynomial systems, with reference results."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from ..division import DivisionKind
from ..monomial import MonomialSet, Ordering
from ..textio import parse_monomials

J, T, P, I, II = (DivisionKind.JANET, DivisionKind.THOMAS, DivisionKind.POMMARET,
                  DivisionKind.DIV1, DivisionKind.DIV2)
DL, DDRL, DDL = DivisionKind.IND_LEX, DivisionKind.IND_DEGREVLEX, DivisionKind.IND_DEGLEX

#: table column order
COLUMNS = (J, T, P, I, II, DL, DDRL, DDL)


@dataclass(frozen=True)
class Reference:
    """One published cell: basis length, prolongations, % reducible, seconds."""
    length: int
    prolongations: int
    percent: int
    seconds: float


@dataclass(frozen=True)
class Fixture:
    name: str
    title: str
    size: tuple[int, int, int]
    expected: dict[DivisionKind, Reference] = field(default_factory=dict)
    # empty cells: "not zero-dimensional" for Pommaret, otherwise "over 10000 s"
    missing: dict[DivisionKind, str] = field(default_factory=dict)

    @property
    def monomials(self) -> MonomialSet:
        return load(self.name)


def _row(*cells):
    return {k: Reference(*c) for k, c in zip(COLUMNS, cells) if c is not None}


_SLOW = "not computed, over 10000 s"
_NOT0 = "ideal not zero-dimensional"

FIXTURES: dict[str, Fixture] = {f.name: f for f in [
    Fixture("reimer5", "Reimer system in 5 variables", (38, 5, 8), _row(
        (55, 190, 91, 3.7), (4392, 17406, 75, 4484), (55, 190, 91, 3.4), None,
        (151, 503, 77, 11), (242, 798, 74, 48), (894, 3994, 79, 556), (594, 2639, 79, 267)),
        {I: _SLOW}),
    Fixture("katsura7", "Katsura system in 7 variables", (41, 7, 7), _row(
        (43, 211, 99, 3.5), None, (43, 211, 99, 3.7), None,
        (201, 861, 81, 20), (201, 892, 82, 44), (1337, 7600, 83, 1500), (1346, 7663, 83, 1539)),
        {T: _SLOW, I: _SLOW}),
    Fixture("cyc4", "cyclic 4-roots", (7, 4, 6), _row(
        (7, 14, 100, 0.19), (98, 242, 62, 5.4), None, (98, 242, 62, 18),
        (25, 55, 67, 0.87), (41, 92, 63, 2.3), (9, 20, 90, 0.33), (7, 14, 100, 0.21)),
        {P: _NOT0}),
    Fixture("cyc5", "cyclic 5-roots", (20, 5, 8), _row(
        (23, 76, 96, 1.1), (1010, 3544, 72, 266), (23, 76, 96, 1.1), (1010, 3544, 72, 1656),
        (93, 297, 75, 5.5), (154, 488, 72, 21), (135, 548, 79, 21), (106, 419, 79, 14))),
    Fixture("cyc6", "cyclic 6-roots", (45, 6, 9), _row(
        (46, 194, 99, 3.2), None, (46, 194, 99, 3.1), None,
        (201, 807, 81, 19), (385, 1527, 78, 123), (841, 4230, 81, 586), (972, 4899, 81, 754)),
        {T: _SLOW, I: _SLOW}),
    Fixture("sq3", "A^2 = 0, generic 3x3 matrix", (25, 9, 4), _row(
        (56, 239, 87, 4.5), None, None, None,
        (612, 2972, 80, 131), (531, 2920, 83, 313), (1711, 9362, 82, 2593),
        (1479, 8044, 82, 2048)),
        {T: _SLOW, P: _NOT0, I: _SLOW}),
    Fixture("sq4", "A^2 = 0, generic 4x4 matrix", (161, 16, 6), _row(
        (1324, 11836, 90, 923)),
        {k: (_NOT0 if k is P else _SLOW) for k in COLUMNS if k is not J}),
]}


class FixtureError(ValueError):
    pass


@lru_cache(maxsize=None)
def _rows(name: str) -> tuple[int, tuple]:
    try:
        fx = FIXTURES[name]
    except KeyError:
        raise FixtureError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
    text = resources.files(__name__).joinpath(f"{name}.txt").read_text()
    n, ms = parse_monomials(text, source=f"fixture {name}")
    size = (len(ms), n, max(map(sum, ms)))
    if size != fx.size:
        raise FixtureError(f"fixture {name} has (m, n, d) = {size}, expected {fx.size}")
    return n, tuple(ms)


def load(name: str) -> MonomialSet:
    """The fixture's monomials, checked against the published (m, n, d)."""
    n, ms = _rows(name)
    return MonomialSet(ms, Ordering.DEGREVLEX, n)


def provenance(name: str) -> list[str]:
    text = resources.files(__name__).joinpath(f"{name}.txt").read_text()
    return [line[1:].strip() for line in text.splitlines() if line.startswith("#")]
