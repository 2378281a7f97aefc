"""Seeded random monomial sets for randomized verification."""

from __future__ import annotations

import random

from .monomial import Monomial


def random_monomial(rng: random.Random, n: int, max_deg: int, min_deg: int = 0) -> Monomial:
    d = rng.randint(min_deg, max_deg)
    exps = [0] * n
    for _ in range(d):
        exps[rng.randrange(n)] += 1
    return tuple(exps)


def random_set(rng: random.Random, max_vars: int = 5, max_size: int = 12, max_deg: int = 6,
               min_vars: int = 1, min_size: int = 1, n: int | None = None,
               min_deg: int = 1) -> tuple[int, list[Monomial]]:
    """(arity, distinct monomials); degrees drawn uniformly, then variables.

    The unit monomial is excluded by default since it collapses every set.
    """
    n = n or rng.randint(min_vars, max_vars)
    size = rng.randint(min_size, max_size)
    out: set[Monomial] = set()
    for _ in range(8 * size):
        if len(out) >= size:
            break
        out.add(random_monomial(rng, n, max_deg, min_deg))
    return n, sorted(out)


def random_instance(rng: random.Random, max_vars: int = 5, max_size: int = 12,
                    max_deg: int = 6) -> tuple[int, list[Monomial]]:
    """A random set within the bounds, at least two variables and elements.

    The degree floor is itself random: a low floor lets small generators
    absorb the rest, a high one keeps large antichains.
    """
    min_deg = rng.randint(1, max_deg)
    return random_set(rng, max_vars, max_size, max_deg, min_vars=min(2, max_vars),
                      min_size=min(2, max_size), min_deg=min_deg)
