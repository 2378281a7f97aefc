"""Completion of monomial sets to minimal involutive bases.

The engine keeps the growing basis in a sorted array (binary-search
insertion), maintains separations incrementally after each insertion and
selects prolongations through one min-heap per variable.  Every shortcut has a
plain counterpart in this module or in :mod:`involutive.division` against
which the test-suite checks it.
"""

from __future__ import annotations

import heapq
import time
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .division import (
    DivisionKind,
    Separation,
    cone_member,
    full_mask,
    separation_table,
)
from .monomial import (
    Monomial,
    MonomialSet,
    Ordering,
    autoreduce,
    divides,
    multiply,
    support,
)


class CapExceeded(RuntimeError):
    """A completion limit was hit; ``partial`` holds the state at that point."""

    def __init__(self, message: str, partial: "CompletionResult"):
        super().__init__(message)
        self.partial = partial


class DegreeCapExceeded(CapExceeded):
    pass


class ElementCapExceeded(CapExceeded):
    pass


@dataclass(frozen=True)
class Limits:
    max_degree: int | None = None
    max_elements: int | None = None

    def __post_init__(self):
        for name in ("max_degree", "max_elements"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")

    @classmethod
    def default(cls, monomials: Sequence[Monomial], n: int,
                kind: DivisionKind | None = None) -> "Limits":
        """Degree cap 2*d + n, raised to the degree no prolongation can exceed
        for divisions whose completion stays bounded."""
        monomials = list(monomials)
        d = max((sum(m) for m in monomials), default=0)
        cap = 2 * d + n
        if monomials and kind is not None and kind is not DivisionKind.POMMARET:
            if kind is DivisionKind.DIV2:
                # prolongations never raise the largest exponent
                bound = n * max(max(m) for m in monomials)
            else:
                # nonmultiplicative degrees stay below the maximum over the set,
                # so every basis element divides lcm(U)
                bound = sum(max(m[i] for m in monomials) for i in range(n))
            cap = max(cap, bound)
        return cls(max_degree=cap, max_elements=50_000)


@dataclass
class CompletionStats:
    examined: int = 0
    reducible: int = 0
    added: int = 0
    elapsed: float = 0.0
    # distinct (u, x) pairs examined; differs from `examined` by retests
    distinct: int = 0

    @property
    def irreducible(self) -> int:
        return self.added

    @property
    def percent_reducible(self) -> float:
        return 100.0 * self.reducible / self.examined if self.examined else 100.0

    def to_dict(self) -> dict:
        return {"examined": self.examined, "reducible": self.reducible, "added": self.added,
                "distinct": self.distinct, "elapsed_seconds": self.elapsed}


@dataclass(frozen=True)
class CompletionResult:
    basis: MonomialSet
    separations: list[Separation]
    stats: CompletionStats
    division: DivisionKind
    completion_order: Ordering
    input_size: int = 0

    def to_dict(self) -> dict:
        return {
            "division": self.division.value,
            "ordering": self.completion_order.value,
            "basis": [list(m) for m in self.basis],
            "stats": self.stats.to_dict(),
        }

    @classmethod
    def from_dict(cls, record: dict) -> "CompletionResult":
        kind = DivisionKind(record["division"])
        order = Ordering(record["ordering"])
        basis = [tuple(m) for m in record["basis"]]
        n = len(basis[0]) if basis else int(record.get("n", 1))
        ms = MonomialSet(basis, order, n)
        stats = CompletionStats(**{k if k != "elapsed_seconds" else "elapsed": v
                                   for k, v in record["stats"].items()})
        return cls(ms, separation_table(kind, ms.monomials), stats, kind, order)

    def to_text(self) -> str:
        s = self.stats
        lines = [f"vars {self.basis.n}"]
        lines += [" ".join(map(str, m)) for m in self.basis]
        lines.append(f"# division={self.division.value} ordering={self.completion_order.value}"
                     f" length={len(self.basis)}")
        lines.append(f"# examined={s.examined} reducible={s.reducible} added={s.added}"
                     f" distinct={s.distinct} reducible%={s.percent_reducible:.1f} elapsed={s.elapsed:.3f}s")
        return "\n".join(lines) + "\n"


def _lcp_range(elems: Sequence[Monomial], v: Monomial) -> tuple[int, int, int]:
    """(k, lo, hi): the longest prefix length v shares with an element of the
    lex-ascending list ``elems`` and the index range carrying that prefix."""
    if not elems:
        return 0, 0, 0
    n = len(v)
    pos = bisect_left(elems, v)
    k = 0
    # the longest common prefix is attained at a sorted neighbour
    for j in (pos - 1, pos):
        if 0 <= j < len(elems):
            w = elems[j]
            c = 0
            while c < n and w[c] == v[c]:
                c += 1
            k = max(k, c)
    if k == 0:
        return 0, 0, len(elems)
    prefix = v[:k]
    return k, bisect_left(elems, prefix), bisect_right(elems, prefix + (float("inf"),))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _revlex_key(u: Monomial) -> tuple:
    return tuple(-e for e in reversed(u))


class InvolutiveSet:
    """A monomial set with its separations, kept current under insertion.

    Elements are stored ascending under a structural ordering: lex for Janet
    (prefix classes are then contiguous), the inducing ordering for induced
    divisions, otherwise the completion ordering.
    """

    def __init__(self, monomials: Iterable[Monomial], kind: DivisionKind, n: int,
                 order: Ordering = Ordering.LEX, separations: dict | None = None):
        self.kind = kind
        self.n = n
        if kind is DivisionKind.JANET:
            self.struct_order = Ordering.LEX
        else:
            self.struct_order = kind.inducing_order or order
        self._key = self.struct_order.key
        self.elems: list[Monomial] = sorted(set(monomials), key=self._key)
        self.keys = [self._key(m) for m in self.elems]
        if separations is None:
            separations = dict(zip(self.elems, separation_table(kind, self.elems)))
        self.mult: dict[Monomial, Separation] = {m: separations[m] for m in self.elems}
        self._full = full_mask(n)
        self._pow2 = np.array([1 << i for i in range(n)], dtype=np.int64)
        self._use_matrix = kind in (DivisionKind.THOMAS, DivisionKind.DIV1) or \
            kind.inducing_order is not None
        if self._use_matrix:
            self.mat = np.array(self.elems, dtype=np.int64).reshape(len(self.elems), n)
            self.mult_arr = np.array([self.mult[m] for m in self.elems], dtype=np.int64)
        self.buckets: dict[tuple[int, int], set[Monomial]] = {}
        if kind is not DivisionKind.JANET:
            for m in self.elems:
                self._index(m)

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, u: Monomial) -> bool:
        return u in self.mult

    def _index(self, m: Monomial) -> None:
        for i, e in enumerate(m):
            self.buckets.setdefault((i, e), set()).add(m)

    # -- prefix classes (lex-sorted storage only) ----------------------------

    def lcp_class(self, v: Monomial) -> tuple[int, int, int]:
        return _lcp_range(self.elems, v)

    # -- involutive divisor search ------------------------------------------

    def find_divisor(self, v: Monomial, hint: tuple[Monomial, int] | None = None) -> Monomial | None:
        kind = self.kind
        mult = self.mult
        if kind is DivisionKind.JANET:
            # the divisor lies in the prefix class of lcp(v, U)
            k, lo, hi = self.lcp_class(v)
            if k == self.n:
                return v
            for w in self.elems[lo:hi]:
                if cone_member(v, w, mult[w]):
                    return w
            return None
        if hint is None:
            for w in self.elems:
                if cone_member(v, w, mult[w]):
                    return w
            return None
        u, x = hint
        if kind is DivisionKind.THOMAS:
            # v = u*x never exceeds the per-variable maximal degrees, so any
            # Thomas divisor of v must agree with v in every variable
            return v if v in mult else None
        if v in mult:
            return v
        if kind is DivisionKind.POMMARET:
            ku = _revlex_key(u)
            accept = lambda w: _revlex_key(w) > ku  # noqa: E731
        elif kind.inducing_order is not None:
            ku = self._key(u)
            accept = lambda w: self._key(w) < ku  # noqa: E731
        else:
            accept = None
        # a divisor of a prolongation by x has the same degree in x
        for w in self.buckets.get((x, v[x]), ()):
            if accept is not None and not accept(w):
                continue
            if cone_member(v, w, mult[w]):
                return w
        return None

    # -- insertion with incremental separation update -----------------------

    def insert(self, v: Monomial, var: int | None = None) -> list[tuple[Monomial, int]]:
        """Add v and update separations.

        Returns ``(element, newly nonmultiplicative bits)`` for every element
        whose separation changed, v itself included.
        """
        if v in self.mult:
            raise ValueError(f"{v} is already in the set")
        kind = self.kind
        if kind.is_global:
            changes = [(v, separation_table(kind, [v])[0])]
        elif kind is DivisionKind.JANET:
            changes = self._janet_update(v)
        elif kind.inducing_order is not None and var is not None and \
                v[var] > 0 and (v[:var] + (v[var] - 1,) + v[var + 1:]) in self.mult:
            changes = self._induced_update(v, var)
        else:
            changes = self._pairwise_update(v)
        vsep = changes[0][1]
        pos = bisect_left(self.keys, self._key(v))
        self.elems.insert(pos, v)
        self.keys.insert(pos, self._key(v))
        self.mult[v] = vsep
        if self._use_matrix:
            self.mat = np.insert(self.mat, pos, v, axis=0)
            self.mult_arr = np.insert(self.mult_arr, pos, vsep)
        if kind is not DivisionKind.JANET:
            self._index(v)
        out = [(v, self._full & ~vsep)]
        for s, lost in changes[1:]:
            self.mult[s] &= ~lost
            out.append((s, lost))
        if self._use_matrix and len(out) > 1:
            for s, lost in out[1:]:
                i = bisect_left(self.keys, self._key(s))
                self.mult_arr[i] = self.mult[s]
        return out

    def _janet_update(self, v: Monomial) -> list[tuple[Monomial, int]]:
        # only the prefix class of lcp(v, U) can change, and only in the
        # first variable after the common prefix
        if not self.elems:
            return [(v, self._full)]
        k, lo, hi = self.lcp_class(v)
        members = self.elems[lo:hi]
        top = max(w[k] for w in members)
        bit = 1 << k
        changes = []
        vsep = self._full & ~((bit << 1) - 1)   # variables after x_{k+1}
        if k:
            vsep |= self.mult[members[0]] & (bit - 1)
        if v[k] > top:
            vsep |= bit
            changes = [(w, bit) for w in members if w[k] == top and self.mult[w] & bit]
        return [(v, vsep)] + changes

    def _induced_update(self, v: Monomial, j: int) -> list[tuple[Monomial, int]]:
        # only x_j can turn nonmultiplicative, and only for s > v with
        # deg_j(s) = deg_j(v) - 1
        pos = bisect_left(self.keys, self._key(v))
        if pos:
            below = self.mat[:pos].max(axis=0)
            nonmult = int(((below > np.array(v)) * self._pow2).sum())
        else:
            nonmult = 0
        bit = 1 << j
        above = self.mat[pos:]
        hits = np.nonzero((above[:, j] == v[j] - 1) & (self.mult_arr[pos:] & bit != 0))[0]
        changes = [(self.elems[pos + int(i)], bit) for i in hits]
        return [(v, self._full & ~nonmult)] + changes

    def _pairwise_update(self, v: Monomial) -> list[tuple[Monomial, int]]:
        # NM(u, U + v) = NM(u, U) | NM(u, {u, v})
        if not self.elems:
            return [(v, separation_table(self.kind, [v])[0])]
        vec = np.array(v, dtype=np.int64)
        mat = self.mat
        kind = self.kind
        if kind is DivisionKind.THOMAS:
            nm_rows = (mat < vec) @ self._pow2
            v_nm = int(((mat.max(axis=0) > vec) * self._pow2).sum())
        elif kind is DivisionKind.DIV1:
            half = self.n // 2
            up = mat < vec
            cnt = up.sum(axis=1)
            nm_rows = np.where((cnt >= 1) & (cnt <= half), up @ self._pow2, 0)
            down = mat > vec
            cnt = down.sum(axis=1)
            v_rows = np.where((cnt >= 1) & (cnt <= half), down @ self._pow2, 0)
            v_nm = int(np.bitwise_or.reduce(v_rows)) if len(v_rows) else 0
        else:  # induced division without a prolongation hint
            order_key = self._key
            kv = order_key(v)
            pos = bisect_left(self.keys, kv)
            nm_rows = np.zeros(len(self.elems), dtype=np.int64)
            nm_rows[pos:] = (mat[pos:] < vec) @ self._pow2
            v_nm = int(((mat[:pos].max(axis=0) > vec) * self._pow2).sum()) if pos else 0
        lost = nm_rows & self.mult_arr
        changes = [(self.elems[int(i)], int(lost[i])) for i in np.nonzero(lost)[0]]
        return [(v, self._full & ~v_nm)] + changes

    def table(self) -> dict[Monomial, Separation]:
        return dict(self.mult)


class ProlongationQueue:
    """Per-variable minimal untested prolongations.

    Slot ``x`` is a heap of the elements u that still have to be prolonged by
    x; its top yields the minimal prolongation by x because u < u' implies
    u*x < u'*x.  The next prolongation is the least slot top.
    """

    def __init__(self, n: int, order: Ordering):
        self.n = n
        self.order = order
        self._key = order.key
        self._heaps: list[list] = [[] for _ in range(n)]
        self.pending: set[tuple[Monomial, int]] = set()

    def __len__(self) -> int:
        return len(self.pending)

    def push(self, u: Monomial, x: int) -> None:
        if (u, x) not in self.pending:
            self.pending.add((u, x))
            heapq.heappush(self._heaps[x], (self._key(u), u))

    def slots(self) -> list[Monomial | None]:
        """The current P(x) for every variable x, None when empty."""
        return [multiply(h[0][1], x) if h else None for x, h in enumerate(self._heaps)]

    def peek(self) -> tuple[Monomial, int] | None:
        best = None
        for x, h in enumerate(self._heaps):
            if h:
                cand = (self._key(multiply(h[0][1], x)), x)
                if best is None or cand < best:
                    best = cand
        if best is None:
            return None
        x = best[1]
        return self._heaps[x][0][1], x

    def pop(self) -> tuple[Monomial, int]:
        top = self.peek()
        if top is None:
            raise IndexError("pop from an empty prolongation queue")
        u, x = top
        heapq.heappop(self._heaps[x])
        self.pending.discard((u, x))
        return u, x


class Completion:
    """Stepwise completion state; :func:`complete` drives it to the end."""

    def __init__(self, monomials: Iterable[Monomial], kind: DivisionKind, n: int,
                 order: Ordering | None = None, limits: Limits | None = None):
        reduced = autoreduce(monomials)
        self.kind = kind
        self.n = n
        self.order = order or kind.default_order
        self.limits = limits if limits is not None else Limits.default(reduced, n, kind)
        self.input_size = len(reduced)
        self.stats = CompletionStats()
        self.basis = InvolutiveSet(reduced, kind, n, self.order)
        self.queue = ProlongationQueue(n, self.order)
        # prolongations found reducible: divisor -> [(u, x, quotient support)]
        self.covered: dict[Monomial, list[tuple[Monomial, int, int]]] = {}
        self.done: set[tuple[Monomial, int]] = set()
        self._seen: set[tuple[Monomial, int]] = set()
        self.history: list[Monomial] = []
        for u in self.basis.elems:
            for x in _bits(self._full_nonmult(u)):
                self.queue.push(u, x)

    def _full_nonmult(self, u: Monomial) -> int:
        return full_mask(self.n) & ~self.basis.mult[u]

    def untested(self) -> list[tuple[Monomial, int]]:
        """All (u, x) with x nonmultiplicative for u not covered by a test."""
        return [(u, x) for u in self.basis.elems for x in _bits(self._full_nonmult(u))
                if (u, x) not in self.done]

    def step(self) -> tuple[Monomial, Monomial | None]:
        """Examine the next prolongation; returns it with its divisor."""
        u, x = self.queue.pop()
        v = multiply(u, x)
        self.stats.examined += 1
        if (u, x) not in self._seen:
            self._seen.add((u, x))
            self.stats.distinct += 1
        w = self.basis.find_divisor(v, (u, x))
        if w is not None:
            self.stats.reducible += 1
            self.done.add((u, x))
            self.covered.setdefault(w, []).append((u, x, _qsupport(v, w)))
            return v, w
        self._check_limits(v)
        changes = self.basis.insert(v, x)
        self.stats.added += 1
        self.done.add((u, x))
        self.history.append(v)
        for s, lost in changes:
            for y in _bits(lost):
                self.queue.push(s, y)
            deps = self.covered.get(s)
            if s is not v and deps:
                keep = []
                for pu, px, q in deps:
                    if q & lost:
                        # the divisor lost a variable of the quotient
                        self.done.discard((pu, px))
                        self.queue.push(pu, px)
                    else:
                        keep.append((pu, px, q))
                self.covered[s] = keep
        return v, None

    def _check_limits(self, v: Monomial) -> None:
        lim = self.limits
        if lim.max_degree is not None and sum(v) > lim.max_degree:
            raise DegreeCapExceeded(
                f"prolongation {v} exceeds degree cap {lim.max_degree}", self.result())
        if lim.max_elements is not None and len(self.basis) + 1 > lim.max_elements:
            raise ElementCapExceeded(
                f"basis would exceed {lim.max_elements} elements", self.result())

    def run(self, on_step: Callable[["Completion"], None] | None = None) -> "CompletionResult":
        t0 = time.perf_counter()
        try:
            while self.queue:
                if on_step is not None:
                    on_step(self)
                self.step()
        finally:
            self.stats.elapsed += time.perf_counter() - t0
        return self.result()

    def result(self) -> CompletionResult:
        basis = MonomialSet(self.basis.elems, self.order, self.n)
        seps = [self.basis.mult[m] for m in basis]
        return CompletionResult(basis, seps, self.stats, self.kind, self.order, self.input_size)


def _qsupport(v: Monomial, w: Monomial) -> int:
    return support(tuple(a - b for a, b in zip(v, w)))


def complete(U: MonomialSet | Iterable[Monomial], kind: DivisionKind,
             order: Ordering | None = None, limits: Limits | None = None,
             n: int | None = None) -> CompletionResult:
    """Minimal involutive basis of the ideal generated by U."""
    if isinstance(U, MonomialSet):
        n = U.n
        ms = list(U)
    else:
        ms = [tuple(m) for m in U]
        if n is None:
            if not ms:
                raise ValueError("arity of an empty input must be given")
            n = len(ms[0])
    return Completion(ms, kind, n, order, limits).run()


# -- plain predicates and oracles ------------------------------------------

def _as_list(U) -> list[Monomial]:
    return list(U) if isinstance(U, MonomialSet) else [tuple(m) for m in U]


def find_involutive_divisor_naive(v: Monomial, U: Sequence[Monomial],
                                  seps: Sequence[Separation]) -> list[Monomial]:
    """Every involutive divisor of v in U, by exhaustive scan."""
    return [w for w, s in zip(U, seps) if cone_member(v, w, s)]


def find_involutive_divisor(v: Monomial, U: MonomialSet | Sequence[Monomial],
                            seps: Sequence[Separation], kind: DivisionKind,
                            hint: tuple[Monomial, int] | None = None) -> Monomial | None:
    """Involutive divisor of v in an involutively autoreduced set U.

    ``seps`` is index-aligned with iteration over U.  ``hint=(u, x)`` states
    that v is the prolongation u*x, which enables the degree filter.
    """
    ms = _as_list(U)
    if not ms:
        return None
    inv = InvolutiveSet(ms, kind, len(ms[0]), separations=dict(zip(ms, seps)))
    return inv.find_divisor(tuple(v), hint)


def longest_common_prefix_class(v: Monomial, U: MonomialSet | Sequence[Monomial]) -> tuple[int, range]:
    """Longest prefix length k shared by v with an element of U, and the
    positions (in lex-descending order) of the elements with that prefix."""
    ms = sorted(set(_as_list(U)))
    if not ms:
        return 0, range(0)
    k, lo, hi = _lcp_range(ms, tuple(v))
    m = len(ms)
    return k, range(m - hi, m - lo)


def update_separations(kind: DivisionKind, U: MonomialSet | Sequence[Monomial],
                       seps: Sequence[Separation], v: Monomial,
                       var: int | None = None) -> dict[Monomial, Separation]:
    """Separations of U + {v} from those of U, without full recomputation.

    ``var`` names the prolonged variable when v = u*x_var for some u in U.
    """
    ms = _as_list(U)
    n = len(v)
    inv = InvolutiveSet(ms, kind, n, separations=dict(zip(ms, seps)))
    inv.insert(tuple(v), var)
    return inv.table()


def first_unreduced_prolongation(U: MonomialSet | Sequence[Monomial],
                                 kind: DivisionKind) -> tuple[Monomial, int, Monomial] | None:
    """(u, x, u*x) for the first prolongation lacking an involutive divisor."""
    ms = _as_list(U)
    if not ms:
        return None
    n = len(ms[0])
    seps = separation_table(kind, ms)
    for u, s in zip(ms, seps):
        for x in range(n):
            if not s >> x & 1:
                v = multiply(u, x)
                if not find_involutive_divisor_naive(v, ms, seps):
                    return u, x, v
    return None


def is_involutive(U: MonomialSet | Sequence[Monomial], kind: DivisionKind) -> bool:
    return first_unreduced_prolongation(U, kind) is None


def is_involutively_autoreduced(U: MonomialSet | Sequence[Monomial], kind: DivisionKind) -> bool:
    ms = _as_list(U)
    seps = separation_table(kind, ms)
    for u in ms:
        for w, s in zip(ms, seps):
            if w != u and cone_member(u, w, s):
                return False
    return True


def involutive_cover(basis: Sequence[Monomial], seps: Sequence[Separation],
                     v: Monomial) -> list[Monomial]:
    return [w for w, s in zip(basis, seps) if cone_member(v, w, s)]


__all__ = [
    "CapExceeded", "DegreeCapExceeded", "ElementCapExceeded", "Limits", "CompletionStats",
    "CompletionResult", "InvolutiveSet", "ProlongationQueue", "Completion", "complete",
    "find_involutive_divisor", "find_involutive_divisor_naive", "longest_common_prefix_class",
    "update_separations", "is_involutive", "is_involutively_autoreduced",
    "first_unreduced_prolongation", "involutive_cover",
]
