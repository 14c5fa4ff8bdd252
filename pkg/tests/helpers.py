"""Shared builders and caches for the test suite."""

from __future__ import annotations

import functools
import random
from fractions import Fraction

import jacobisum as js

# every prime power q with 3 <= q <= 32
PRIME_POWERS = {
    3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2),
    11: (11, 1), 13: (13, 1), 16: (2, 4), 17: (17, 1), 19: (19, 1),
    23: (23, 1), 25: (5, 2), 27: (3, 3), 29: (29, 1), 31: (31, 1), 32: (2, 5),
}

ACCEPTANCE_Q = sorted(PRIME_POWERS)


@functools.lru_cache(maxsize=None)
def field(q: int) -> js.FiniteField:
    p, n = PRIME_POWERS[q]
    return js.build_field(p, n)


@functools.lru_cache(maxsize=None)
def table(q: int) -> js.JacobiTable:
    return js.compute_jacobi(field(q))


def random_cyclotomic(rng: random.Random, m: int, span: int = 3) -> js.Cyclotomic:
    deg = js.euler_phi(m)
    return js.Cyclotomic.from_coefficients(
        m, [Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(deg)]
    )


def random_table(rng: random.Random, factors) -> js.JacobiTable:
    g = js.GroupSpec(tuple(factors))
    rows = [[random_cyclotomic(rng, g.m) for _ in range(g.m)] for _ in range(g.m)]
    return js.JacobiTable(g, rows)


def symmetric_random_table(rng: random.Random, factors) -> js.JacobiTable:
    g = js.GroupSpec(tuple(factors))
    m = g.m
    rows = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            rows[i][j] = rows[j][i] = random_cyclotomic(rng, m)
    return js.JacobiTable(g, rows)


def random_function(rng: random.Random, group: js.GroupSpec) -> dict:
    return {e: random_cyclotomic(rng, group.m) for e in group.elements}
