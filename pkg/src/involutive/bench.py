"""Reproduction harness for the published results table."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .completion import CapExceeded, Completion, Limits
from .division import DivisionKind
from .fixtures import COLUMNS, FIXTURES, Fixture, Reference, load
from .monomial import is_zero_dimensional


@dataclass
class Cell:
    fixture: str
    division: DivisionKind
    status: str                   # "ok", "capped" or "skipped"
    length: int | None = None
    examined: int | None = None
    distinct: int | None = None
    reducible: int | None = None
    elapsed: float | None = None
    expected: Reference | None = None
    note: str = ""
    basis: frozenset = field(default=frozenset(), repr=False)

    @property
    def percent(self) -> int | None:
        if self.examined is None:
            return None
        if not self.examined:
            return 100
        return round(100 * self.reducible / self.examined)

    @property
    def percent_match(self) -> bool | None:
        """Published percentages are rounded; agree within one point."""
        if self.expected is None or self.status != "ok":
            return None
        return abs(100 * self.reducible / self.examined - self.expected.percent) <= 1

    @property
    def length_match(self) -> bool | None:
        if self.expected is None:
            return None
        return self.status == "ok" and self.length == self.expected.length

    @property
    def prolongation_match(self) -> bool | None:
        if self.expected is None or self.status != "ok":
            return None
        return self.expected.prolongations in (self.examined, self.distinct)

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "fixture": self.fixture,
            "division": self.division.value,
            "label": self.division.label,
            "status": self.status,
            "length": self.length,
            "examined": self.examined,
            "distinct": self.distinct,
            "reducible": self.reducible,
            "percent_reducible": self.percent,
            "note": self.note,
        }
        if timing:
            d["elapsed_seconds"] = self.elapsed
        if self.expected is not None:
            e = self.expected
            d["expected"] = {"length": e.length, "prolongations": e.prolongations,
                             "percent": e.percent, "seconds": e.seconds}
            d["length_match"] = self.length_match
            d["prolongation_match"] = self.prolongation_match
            d["percent_match"] = self.percent_match
        return d


@dataclass
class BenchReport:
    cells: list[Cell]

    def mismatches(self) -> list[Cell]:
        return [c for c in self.cells if c.length_match is False]

    def cell(self, fixture: str, division: DivisionKind) -> Cell | None:
        for c in self.cells:
            if c.fixture == fixture and c.division is division:
                return c
        return None

    def comparable(self) -> list[dict]:
        """Report content without timings, for determinism checks."""
        return [c.to_dict(timing=False) for c in self.cells]

    def to_json(self) -> str:
        return json.dumps({"cells": [c.to_dict() for c in self.cells],
                           "mismatches": len(self.mismatches())}, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["fixture", "division", "metric", "value", "expected"])
        for c in self.cells:
            e = c.expected
            rows = [
                ("status", c.status, ""),
                ("length", c.length, e.length if e else ""),
                ("prolongations", c.examined, e.prolongations if e else ""),
                ("distinct_prolongations", c.distinct, e.prolongations if e else ""),
                ("percent_reducible", c.percent, e.percent if e else ""),
                ("seconds", None if c.elapsed is None else f"{c.elapsed:.4f}",
                 e.seconds if e else ""),
            ]
            for metric, value, expected in rows:
                w.writerow([c.fixture, c.division.label, metric,
                            "" if value is None else value, expected])
        return buf.getvalue()

    def to_markdown(self) -> str:
        fixtures = list(dict.fromkeys(c.fixture for c in self.cells))
        divisions = [k for k in COLUMNS if any(c.division is k for c in self.cells)]
        header = ["Input", "m", "n", "d"] + [k.label for k in divisions]
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        for name in fixtures:
            m, n, d = FIXTURES[name].size
            row = [name, str(m), str(n), str(d)]
            for k in divisions:
                c = self.cell(name, k)
                row.append(_md_cell(c))
            lines.append("| " + " | ".join(row) + " |")
        lines.append("")
        lines.append("Cells: length / prolongations examined / % reducible / seconds; "
                     "published values in brackets where they differ; "
                     "[n distinct] gives the count of distinct prolongations when retests occurred; "
                     "percentages are rounded to nearest and compared with the published ones "
                     "within one point.")
        if self.mismatches():
            lines.append("")
            lines.append("LENGTH MISMATCHES: " + ", ".join(
                f"{c.fixture}/{c.division.label} got {c.length} expected {c.expected.length}"
                for c in self.mismatches()))
        return "\n".join(lines) + "\n"


def _md_cell(c: Cell | None) -> str:
    if c is None:
        return ""
    if c.status != "ok":
        return "–"
    e = c.expected
    parts = [f"**{c.length}**" + (f" [{e.length}]" if e and e.length != c.length else "")]
    prol = str(c.examined)
    if c.distinct != c.examined:
        prol += f" [{c.distinct} distinct]"
    if e and e.prolongations not in (c.examined, c.distinct):
        prol += f" [{e.prolongations}]"
    parts.append(prol)
    pct = f"{c.percent}%"
    if e and e.percent != c.percent:
        pct += f" [{e.percent}%]"
    parts.append(pct)
    parts.append(f"{c.elapsed:.2f} s")
    return "<br>".join(parts)


def default_divisions(fx: Fixture, include_slow: bool = False) -> list[DivisionKind]:
    """Columns run by default: every published cell, plus Pommaret where the
    table leaves it empty for a positive-dimensional ideal (reported as –)."""
    if fx.name == "sq4" and not include_slow:
        return [DivisionKind.JANET]
    out = []
    for k in COLUMNS:
        if k in fx.expected or include_slow or k is DivisionKind.POMMARET:
            out.append(k)
    return out


def run_cell(fx: Fixture, kind: DivisionKind, limits: Limits | None = None,
             skip_positive_dimensional_pommaret: bool = False) -> Cell:
    U = load(fx.name)
    expected = fx.expected.get(kind)
    if (skip_positive_dimensional_pommaret and kind is DivisionKind.POMMARET
            and not is_zero_dimensional(U, U.n)):
        return Cell(fx.name, kind, "skipped", expected=expected, note="ideal not zero-dimensional")
    run = Completion(list(U), kind, U.n, kind.default_order, limits)
    try:
        res = run.run()
    except CapExceeded as exc:
        st = exc.partial.stats
        return Cell(fx.name, kind, "capped", len(exc.partial.basis), st.examined, st.distinct,
                    st.reducible, st.elapsed, expected, note=str(exc))
    st = res.stats
    return Cell(fx.name, kind, "ok", len(res.basis), st.examined, st.distinct, st.reducible,
                st.elapsed, expected, basis=res.basis.as_set())


def run_bench(fixtures: list[str] | None = None, divisions: list[DivisionKind] | None = None,
              include_slow: bool = False, limits: Limits | None = None,
              progress=None) -> BenchReport:
    names = fixtures or [n for n in FIXTURES]
    cells = []
    for name in names:
        fx = FIXTURES[name]
        kinds = divisions or default_divisions(fx, include_slow)
        for kind in kinds:
            cell = run_cell(fx, kind, limits)
            if progress is not None:
                progress(cell)
            cells.append(cell)
    return BenchReport(cells)
