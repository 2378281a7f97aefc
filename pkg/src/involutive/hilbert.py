"""Hilbert function, Hilbert polynomial and index of regularity.

An involutive basis splits the monomial ideal into disjoint cones u*L(u):
a cone with k multiplicative variables holds C(s - deg u + k - 1, k - 1)
monomials of degree s.  Subtracting from the C(s + n - 1, n - 1) monomials of
degree s gives the number of standard monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

import numpy as np

from .completion import CompletionResult
from .monomial import Monomial


class EnumerationTooLarge(ValueError):
    pass


def binomial(a: int, b: int) -> int:
    """C(a, b), zero when a < b or a < 0."""
    if b < 0 or a < b or a < 0:
        return 0
    return comb(a, b)


def _cones(result: CompletionResult) -> list[tuple[int, int]]:
    return [(sum(u), bin(s).count("1")) for u, s in zip(result.basis, result.separations)]


def cone_count(d: int, k: int, s: int) -> int:
    """Monomials of degree s in a cone of degree-d apex with k free variables."""
    if k == 0:
        return 1 if s == d else 0
    return binomial(s - d + k - 1, k - 1)


def ideal_count(result: CompletionResult, s: int) -> int:
    if s < 0:
        raise ValueError("degree must be non-negative")
    return sum(cone_count(d, k, s) for d, k in _cones(result))


def hilbert_function(result: CompletionResult, s: int) -> int:
    """Number of degree-s monomials outside the ideal."""
    n = result.basis.n
    return binomial(s + n - 1, n - 1) - ideal_count(result, s)


# -- polynomials in s with exact rational coefficients ------------------------

Poly = list[Fraction]   # coefficient of s**i at index i


def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _add(p: Poly, q: Poly, sign: int = 1) -> Poly:
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += sign * c
    return _trim(out)


def binomial_poly(shift: int, k: int) -> Poly:
    """C(s + shift, k) as a polynomial in s (k >= 0)."""
    p = [Fraction(1)]
    for j in range(k):
        # multiply by (s + shift - j)
        c = shift - j
        nxt = [Fraction(0)] * (len(p) + 1)
        for i, a in enumerate(p):
            nxt[i] += a * c
            nxt[i + 1] += a
        p = nxt
    f = factorial(k)
    return _trim([a / f for a in p])


def poly_eval(p: Poly, s: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * s + c
    return acc


def format_poly(p: Poly, var: str = "s") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        coef = "" if a == 1 and i else str(a)
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        body = f"{coef}*{mon}" if coef and mon and "/" in coef else f"{coef}{mon}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


@dataclass
class HilbertData:
    n: int
    cones: list[tuple[int, int]]
    polynomial: Poly
    regularity: int

    def hf(self, s: int) -> int:
        if s < 0:
            raise ValueError("degree must be non-negative")
        return binomial(s + self.n - 1, self.n - 1) - sum(cone_count(d, k, s) for d, k in self.cones)

    def ideal_count(self, s: int) -> int:
        return sum(cone_count(d, k, s) for d, k in self.cones)

    def to_dict(self, bound: int) -> dict:
        return {
            "n": self.n,
            "hilbert_function": [[s, self.hf(s)] for s in range(bound + 1)],
            "ideal_count": [[s, self.ideal_count(s)] for s in range(bound + 1)],
            "polynomial": format_poly(self.polynomial),
            "coefficients": [str(c) for c in self.polynomial],
            "regularity": self.regularity,
        }


def hilbert_polynomial(result: CompletionResult) -> tuple[Poly, int]:
    """(Hilbert polynomial, index of regularity)."""
    data = hilbert_data(result)
    return data.polynomial, data.regularity


def hilbert_data(result: CompletionResult) -> HilbertData:
    n = result.basis.n
    cones = _cones(result)
    poly = binomial_poly(n - 1, n - 1)
    # the binomial formulas are polynomial in s from `stable` on
    stable = 0
    for d, k in cones:
        if k == 0:
            stable = max(stable, d + 1)
        else:
            poly = _add(poly, binomial_poly(k - 1 - d, k - 1), -1)
            stable = max(stable, d - k + 1)
    data = HilbertData(n, cones, poly, 0)
    reg = 0
    for s in range(stable - 1, -1, -1):
        if data.hf(s) != poly_eval(poly, s):
            reg = s + 1
            break
    data.regularity = reg
    return data


def brute_force_hf_series(U: Sequence[Monomial], s_max: int, n: int | None = None,
                          limit: int = 10**7) -> list[int]:
    """[HF(0), ..., HF(s_max)] by enumerating standard monomials.

    A standard monomial of degree s is a standard monomial of degree s - 1
    times its last variable, so each level is grown from the previous one
    (every monomial generated exactly once) and filtered by plain
    divisibility against U.  Raises :class:`EnumerationTooLarge` once more
    than ``limit`` candidates were generated.
    """
    U = [tuple(u) for u in U]
    if n is None:
        if not U:
            raise ValueError("arity of an empty set must be given")
        n = len(U[0])
    if s_max < 0:
        raise ValueError("degree must be non-negative")
    gens = [(np.array(g), np.nonzero(g)[0], sum(g)) for g in U]
    level = np.zeros((1, n), dtype=np.int32)
    if any(d == 0 for _, _, d in gens):
        level = level[:0]
    out = [len(level)]
    generated = 0
    for t in range(1, s_max + 1):
        nz = level != 0
        last = np.where(nz.any(axis=1), n - 1 - np.argmax(nz[:, ::-1], axis=1), 0)
        parts = []
        for i in range(n):
            block = level[last <= i].copy()
            block[:, i] += 1
            parts.append(block)
        cand = np.concatenate(parts) if parts else level
        generated += len(cand)
        if generated > limit:
            raise EnumerationTooLarge(f"more than {limit} candidate monomials up to degree {t}")
        hit = np.zeros(len(cand), dtype=bool)
        for g, supp, d in gens:
            if d <= t:
                hit |= (cand[:, supp] >= g[supp]).all(axis=1)
        level = cand[~hit]
        out.append(len(level))
    return out


def brute_force_hf(U: Sequence[Monomial], s: int, n: int | None = None,
                   limit: int = 10**7) -> int:
    """Number of degree-s monomials not divisible by any element of U."""
    return brute_force_hf_series(U, s, n, limit)[s]
