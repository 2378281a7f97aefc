"""Text monomial-set format.

::

    # comment
    vars 3
    2 0 1
    0 1 0

The first non-comment line declares the arity; every further non-comment line
holds one exponent vector.  ``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

from pathlib import Path

from .monomial import MAX_EXPONENT, Monomial, MonomialSet, Ordering


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int | None = None, source: str = "<text>"):
        self.line = line
        self.column = column
        where = f"{source}:{line}" + (f":{column}" if column is not None else "")
        super().__init__(f"{where}: {message}")


def parse_monomials(text: str, source: str = "<text>") -> tuple[int, list[Monomial]]:
    """Parse the text format into (arity, monomials in file order)."""
    n: int | None = None
    monomials: list[Monomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "vars":
                raise ParseError("expected header 'vars n'", lineno, 1, source)
            try:
                n = int(fields[1])
            except ValueError:
                raise ParseError(f"invalid arity {fields[1]!r}", lineno, line.index(fields[1]) + 1,
                                 source) from None
            if n < 1:
                raise ParseError("arity must be at least 1", lineno, None, source)
            continue
        if len(fields) != n:
            raise ParseError(f"expected {n} exponents, found {len(fields)}", lineno, None, source)
        exps = []
        col = 0
        for f in fields:
            col = line.index(f, col)
            if not f.isdigit():
                raise ParseError(f"invalid exponent {f!r}", lineno, col + 1, source)
            e = int(f)
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {f} overflows", lineno, col + 1, source)
            exps.append(e)
            col += len(f)
        monomials.append(tuple(exps))
    if n is None:
        raise ParseError("missing 'vars n' header", 1, None, source)
    return n, monomials


def read_monomial_set(path: str | Path, order: Ordering = Ordering.LEX) -> MonomialSet:
    path = Path(path)
    n, ms = parse_monomials(path.read_text(), source=str(path))
    return MonomialSet(ms, order, n)


def format_monomials(n: int, monomials, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"vars {n}")
    lines.extend(" ".join(map(str, m)) for m in monomials)
    return "\n".join(lines) + "\n"
