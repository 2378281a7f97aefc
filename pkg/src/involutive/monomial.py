"""Exponent-vector monomials, admissible orderings and monomial sets.

A monomial x_1^d_1 ... x_n^d_n is a plain tuple ``(d_1, ..., d_n)``.  Variables
are indexed from 0 internally; x_1 is the greatest variable in every ordering.
"""

from __future__ import annotations

import enum
from bisect import bisect_left
from typing import Callable, Iterable, Iterator, Sequence

Monomial = tuple[int, ...]

#: exponents are kept within signed 32-bit range
MAX_EXPONENT = 2**31 - 1


class ArityError(ValueError):
    pass


class Ordering(enum.Enum):
    LEX = "lex"
    DEGLEX = "deglex"
    DEGREVLEX = "degrevlex"

    @property
    def key(self) -> Callable[[Monomial], tuple]:
        return _KEYS[self]

    @classmethod
    def parse(cls, name: str) -> "Ordering":
        try:
            return cls(name.lower().replace("-", "").replace("_", ""))
        except ValueError:
            raise ValueError(f"unknown ordering {name!r}; expected lex, deglex or degrevlex") from None


def _lex_key(u: Monomial) -> tuple:
    return u


def _deglex_key(u: Monomial) -> tuple:
    return (sum(u), u)


def _degrevlex_key(u: Monomial) -> tuple:
    # equal degree: u > v iff the last nonzero entry of u - v is negative
    return (sum(u), tuple(-e for e in reversed(u)))


_KEYS = {
    Ordering.LEX: _lex_key,
    Ordering.DEGLEX: _deglex_key,
    Ordering.DEGREVLEX: _degrevlex_key,
}


def _check_arity(u: Monomial, v: Monomial) -> None:
    if len(u) != len(v):
        raise ArityError(f"arity mismatch: {len(u)} vs {len(v)}")


def monomial(exponents: Iterable[int]) -> Monomial:
    """Validate and build a monomial from an iterable of exponents."""
    u = tuple(int(e) for e in exponents)
    if not u:
        raise ArityError("a monomial needs at least one variable")
    for e in u:
        if e < 0:
            raise ValueError(f"negative exponent in {u}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return u


def one(n: int) -> Monomial:
    return (0,) * n


def degree(u: Monomial) -> int:
    return sum(u)


def compare(u: Monomial, v: Monomial, order: Ordering) -> int:
    """Return -1, 0 or 1 as u is less than, equal to or greater than v."""
    _check_arity(u, v)
    ku, kv = order.key(u), order.key(v)
    return (ku > kv) - (ku < kv)


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check_arity(u, v)
    return tuple(a if a >= b else b for a, b in zip(u, v))


def divides(u: Monomial, w: Monomial) -> bool:
    """Conventional divisibility u | w."""
    _check_arity(u, w)
    return all(a <= b for a, b in zip(u, w))


def quotient(w: Monomial, u: Monomial) -> Monomial:
    _check_arity(u, w)
    q = tuple(b - a for a, b in zip(u, w))
    if min(q) < 0:
        raise ValueError(f"{u} does not divide {w}")
    return q


def multiply(u: Monomial, var: int) -> Monomial:
    """Prolongation u * x_var (0-based variable index)."""
    if not 0 <= var < len(u):
        raise IndexError(f"variable index {var} out of range for arity {len(u)}")
    if u[var] >= MAX_EXPONENT:
        raise OverflowError("exponent overflow")
    return u[:var] + (u[var] + 1,) + u[var + 1:]


def support(u: Monomial) -> int:
    """Bitmask of the variables occurring in u."""
    mask = 0
    for i, e in enumerate(u):
        if e:
            mask |= 1 << i
    return mask


def autoreduce(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Drop every monomial properly divisible by another one (and duplicates)."""
    # ascending degree: a divisor is never processed after its multiples
    kept: list[Monomial] = []
    for u in sorted(set(monomials), key=lambda m: (sum(m), m)):
        if not any(divides(w, u) for w in kept):
            kept.append(u)
    return kept


def is_zero_dimensional(monomials: Iterable[Monomial], n: int) -> bool:
    """True iff every variable has a pure power among the generators."""
    pure = set()
    for u in monomials:
        nz = [i for i, e in enumerate(u) if e]
        if not nz:
            return True
        if len(nz) == 1:
            pure.add(nz[0])
    return len(pure) == n


class MonomialSet:
    """Duplicate-free monomials of common arity, sorted decreasingly.

    Membership tests and insertion use binary search on the ordering key.
    """

    __slots__ = ("n", "order", "_asc", "_keys")

    def __init__(self, monomials: Iterable[Monomial] = (), order: Ordering = Ordering.LEX,
                 n: int | None = None):
        ms = sorted({tuple(m) for m in monomials}, key=order.key)
        if n is None:
            if not ms:
                raise ArityError("arity of an empty monomial set must be given")
            n = len(ms[0])
        for m in ms:
            if len(m) != n:
                raise ArityError(f"monomial {m} does not have arity {n}")
            monomial(m)
        self.n = n
        self.order = order
        self._asc = ms
        self._keys = [order.key(m) for m in ms]

    @property
    def monomials(self) -> list[Monomial]:
        """The elements in decreasing order."""
        return self._asc[::-1]

    def __len__(self) -> int:
        return len(self._asc)

    def __iter__(self) -> Iterator[Monomial]:
        return reversed(self._asc)

    def __getitem__(self, i: int) -> Monomial:
        return self._asc[len(self._asc) - 1 - i] if i >= 0 else self._asc[-1 - i]

    def __contains__(self, u: object) -> bool:
        if not isinstance(u, tuple) or len(u) != self.n:
            return False
        k = self.order.key(u)
        i = bisect_left(self._keys, k)
        return i < len(self._keys) and self._keys[i] == k

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MonomialSet):
            return self.n == other.n and set(self._asc) == set(other._asc)
        return NotImplemented

    def __repr__(self) -> str:
        return f"MonomialSet({self.monomials!r}, order={self.order.value})"

    def add(self, u: Monomial) -> bool:
        """Insert u; returns False (no-op) if it is already present."""
        if len(u) != self.n:
            raise ArityError(f"monomial {u} does not have arity {self.n}")
        k = self.order.key(u)
        i = bisect_left(self._keys, k)
        if i < len(self._keys) and self._keys[i] == k:
            return False
        self._asc.insert(i, u)
        self._keys.insert(i, k)
        return True

    def index(self, u: Monomial) -> int:
        """Position of u in the decreasing order."""
        k = self.order.key(u)
        i = bisect_left(self._keys, k)
        if i == len(self._keys) or self._keys[i] != k:
            raise KeyError(u)
        return len(self._asc) - 1 - i

    def as_set(self) -> frozenset[Monomial]:
        return frozenset(self._asc)

    def resorted(self, order: Ordering) -> "MonomialSet":
        return MonomialSet(self._asc, order, self.n)

    def autoreduced(self) -> "MonomialSet":
        return MonomialSet(autoreduce(self._asc), self.order, self.n)

    def max_degree(self) -> int:
        return max((sum(m) for m in self._asc), default=0)


def format_monomial(u: Sequence[int], names: Sequence[str] | None = None) -> str:
    """Human-readable power product, e.g. ``x1^2*x3``."""
    names = names or [f"x{i + 1}" for i in range(len(u))]
    parts = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, u) if e]
    return "*".join(parts) or "1"
