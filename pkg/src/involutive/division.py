"""The eight involutive divisions and the axiom checker.

A separation is stored as an ``int`` bitmask whose bit ``i`` is set when the
variable x_{i+1} is multiplicative; the nonmultiplicative variables are the
complement.  The monoid of multiplicative monomials is never materialized.
"""

from __future__ import annotations

import enum
import random
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .monomial import Monomial, Ordering, divides, lcm

Separation = int


class DivisionKind(enum.Enum):
    THOMAS = "thomas"
    JANET = "janet"
    POMMARET = "pommaret"
    DIV1 = "div1"
    DIV2 = "div2"
    IND_LEX = "ind-lex"
    IND_DEGLEX = "ind-deglex"
    IND_DEGREVLEX = "ind-degrevlex"

    @classmethod
    def parse(cls, name: str) -> "DivisionKind":
        try:
            return cls(name.lower())
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown division {name!r}; expected one of {names}") from None

    @classmethod
    def induced(cls, order: Ordering) -> "DivisionKind":
        return {Ordering.LEX: cls.IND_LEX, Ordering.DEGLEX: cls.IND_DEGLEX,
                Ordering.DEGREVLEX: cls.IND_DEGREVLEX}[order]

    @property
    def inducing_order(self) -> Ordering | None:
        return _INDUCING.get(self)

    @property
    def is_global(self) -> bool:
        """Separation depends on the monomial alone, not on the set."""
        return self in (DivisionKind.POMMARET, DivisionKind.DIV2)

    @property
    def noetherian(self) -> bool:
        return self is not DivisionKind.POMMARET

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def default_order(self) -> Ordering:
        """Completion ordering used unless the caller picks one."""
        if self is DivisionKind.JANET:
            return Ordering.LEX
        return self.inducing_order or Ordering.DEGREVLEX


_INDUCING = {
    DivisionKind.IND_LEX: Ordering.LEX,
    DivisionKind.IND_DEGLEX: Ordering.DEGLEX,
    DivisionKind.IND_DEGREVLEX: Ordering.DEGREVLEX,
}

_LABELS = {
    DivisionKind.JANET: "J",
    DivisionKind.THOMAS: "T",
    DivisionKind.POMMARET: "P",
    DivisionKind.DIV1: "I",
    DivisionKind.DIV2: "II",
    DivisionKind.IND_LEX: "D_L",
    DivisionKind.IND_DEGREVLEX: "D_DRL",
    DivisionKind.IND_DEGLEX: "D_DL",
}


def full_mask(n: int) -> int:
    return (1 << n) - 1


def multiplicative_vars(sep: Separation, n: int) -> list[int]:
    return [i for i in range(n) if sep >> i & 1]


def nonmultiplicative_vars(sep: Separation, n: int) -> list[int]:
    return [i for i in range(n) if not sep >> i & 1]


def cone_member(w: Monomial, u: Monomial, sep: Separation) -> bool:
    """True iff u is an involutive divisor of w under the separation of u."""
    if len(w) != len(u):
        raise ValueError(f"arity mismatch: {len(w)} vs {len(u)}")
    for i, (a, b) in enumerate(zip(u, w)):
        if a > b or (a < b and not sep >> i & 1):
            return False
    return True


# -- per-division definitions ------------------------------------------------

def _thomas(u: Monomial, U: Sequence[Monomial]) -> Separation:
    mask = 0
    for i in range(len(u)):
        if u[i] == max(v[i] for v in U):
            mask |= 1 << i
    return mask


def _janet_naive(u: Monomial, U: Sequence[Monomial]) -> Separation:
    mask = 0
    for i in range(len(u)):
        group = [v for v in U if v[:i] == u[:i]]
        if u[i] == max(v[i] for v in group):
            mask |= 1 << i
    return mask


def _pommaret(u: Monomial) -> Separation:
    n = len(u)
    k = max((i for i, e in enumerate(u) if e), default=0)
    return full_mask(n) & ~((1 << k) - 1)


def _div1(u: Monomial, U: Sequence[Monomial]) -> Separation:
    n = len(u)
    nonmult = 0
    for v in U:
        if v == u:
            continue
        diff = [i for i in range(n) if v[i] > u[i]]
        if 1 <= len(diff) <= n // 2:
            for i in diff:
                nonmult |= 1 << i
    return full_mask(n) & ~nonmult


def _div2(u: Monomial) -> Separation:
    dmax = max(u)
    mask = 0
    for i, e in enumerate(u):
        if e == dmax:
            mask |= 1 << i
    return mask


def _induced_naive(u: Monomial, U: Sequence[Monomial], order: Ordering) -> Separation:
    key = order.key
    ku = key(u)
    nonmult = 0
    for v in U:
        if key(v) < ku:
            for i in range(len(u)):
                if u[i] < v[i]:
                    nonmult |= 1 << i
    return full_mask(len(u)) & ~nonmult


def separation(kind: DivisionKind, u: Monomial, U: Iterable[Monomial] = ()) -> Separation:
    """Multiplicative-variable mask of u in U straight from the definitions."""
    if kind is DivisionKind.POMMARET:
        return _pommaret(u)
    if kind is DivisionKind.DIV2:
        return _div2(u)
    U = list(U)
    if u not in U:
        raise ValueError(f"{u} is not an element of the monomial set")
    if kind is DivisionKind.THOMAS:
        return _thomas(u, U)
    if kind is DivisionKind.JANET:
        return _janet_naive(u, U)
    if kind is DivisionKind.DIV1:
        return _div1(u, U)
    return _induced_naive(u, U, kind.inducing_order)


# -- fast separation tables -------------------------------------------------

def janet_table(U: Sequence[Monomial]) -> dict[Monomial, Separation]:
    """Janet separations by recursive splitting of the lex-descending list."""
    ms = sorted(set(U), reverse=True)
    out = {m: 0 for m in ms}
    if not ms:
        return out
    n = len(ms[0])
    # blocks share their first i exponents; in lex-descending order the first
    # subgroup of a block carries the maximal degree in x_{i+1}
    stack = [(0, len(ms), 0)]
    while stack:
        lo, hi, i = stack.pop()
        if i == n:
            continue
        top = ms[lo][i]
        start = lo
        for j in range(lo, hi + 1):
            if j == hi or ms[j][i] != ms[start][i]:
                if ms[start][i] == top:
                    for t in range(start, j):
                        out[ms[t]] |= 1 << i
                stack.append((start, j, i + 1))
                start = j
    return out


def cumulated_multiples(U: Sequence[Monomial], order: Ordering) -> list[Monomial]:
    """Suffix lcms m_i = lcm(u_i, ..., u_last) of a decreasingly sorted list."""
    key = order.key
    for a, b in zip(U, U[1:]):
        if not key(a) > key(b):
            raise ValueError("monomials must be sorted strictly decreasingly")
    out: list[Monomial] = []
    acc = None
    for u in reversed(U):
        acc = u if acc is None else lcm(acc, u)
        out.append(acc)
    out.reverse()
    return out


def induced_table(U: Sequence[Monomial], order: Ordering) -> dict[Monomial, Separation]:
    """Induced-division separations from the cumulated multiples."""
    ms = sorted(set(U), key=order.key, reverse=True)
    out = {}
    for u, m in zip(ms, cumulated_multiples(ms, order)):
        nonmult = 0
        for j, (a, b) in enumerate(zip(u, m)):
            if a < b:
                nonmult |= 1 << j
        out[u] = full_mask(len(u)) & ~nonmult
    return out


def thomas_table(U: Sequence[Monomial]) -> dict[Monomial, Separation]:
    if not U:
        return {}
    n = len(U[0])
    tops = [max(u[i] for u in U) for i in range(n)]
    return {u: sum(1 << i for i in range(n) if u[i] == tops[i]) for u in U}


def separation_table(kind: DivisionKind, U: Sequence[Monomial]) -> list[Separation]:
    """Separations of every element of U, index-aligned with U."""
    U = list(U)
    if kind is DivisionKind.JANET:
        table = janet_table(U)
    elif kind.inducing_order is not None:
        table = induced_table(U, kind.inducing_order)
    elif kind is DivisionKind.THOMAS:
        table = thomas_table(U)
    else:
        return [separation(kind, u, U) for u in U]
    return [table[u] for u in U]


# -- axiom checker -----------------------------------------------------------

@dataclass
class AxiomReport:
    division: str
    set_size: int
    checked: dict[str, str] = field(default_factory=dict)
    passed: bool = True
    witness: tuple | None = None
    failed_condition: str | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def axiom_check(kind: DivisionKind | Callable[[Sequence[Monomial]], list[Separation]],
                U: Sequence[Monomial], subset_samples: int = 16,
                rng: random.Random | None = None, exhaustive: bool = False) -> AxiomReport:
    """Check conditions (b), (c), (d) of an involutive division on the set U.

    ``kind`` may also be any function mapping a monomial list to its
    separations, so candidate strategies can be tested.  Condition (a) holds
    structurally because every L(u, U) is generated by variables.  With
    ``exhaustive`` every subset of U is tried for (d) (only allowed for
    |U| <= 10); otherwise ``subset_samples`` random subsets.
    """
    U = sorted(set(map(tuple, U)))
    rng = rng or random.Random(0)
    if isinstance(kind, DivisionKind):
        name, is_global = kind.value, kind.is_global
        table = lambda V: separation_table(kind, V)  # noqa: E731
    else:
        name, is_global, table = getattr(kind, "__name__", "custom"), False, kind
    report = AxiomReport(name, len(U), {"a": "structural"})
    seps = dict(zip(U, table(U)))

    def fail(cond, witness):
        report.passed = False
        report.failed_condition = cond
        report.witness = witness
        report.checked[cond] = "fail"
        return report

    for u, v in combinations(U, 2):
        # the cones meet iff lcm(u, v) lies in both
        w = lcm(u, v)
        if cone_member(w, u, seps[u]) and cone_member(w, v, seps[v]):
            if not (cone_member(u, v, seps[v]) or cone_member(v, u, seps[u])):
                return fail("b", (u, v))
    report.checked["b"] = "pass"

    for u in U:
        for v in U:
            if u != v and cone_member(v, u, seps[u]) and seps[v] & ~seps[u]:
                var = (seps[v] & ~seps[u]).bit_length() - 1
                return fail("c", (u, v, var))
    report.checked["c"] = "pass"

    if is_global:
        report.checked["d"] = "vacuous"
        return report
    if exhaustive:
        if len(U) > 10:
            raise ValueError("exhaustive subset check limited to |U| <= 10")
        subsets = [[u for j, u in enumerate(U) if bits >> j & 1] for bits in range(1, 1 << len(U))]
    else:
        subsets = [rng.sample(U, rng.randint(1, len(U))) for _ in range(subset_samples)] if U else []
    for V in subsets:
        for u, s in zip(V, table(V)):
            if seps[u] & ~s:
                var = (seps[u] & ~s).bit_length() - 1
                return fail("d", (u, tuple(sorted(V)), var))
    report.checked["d"] = "pass"
    return report
