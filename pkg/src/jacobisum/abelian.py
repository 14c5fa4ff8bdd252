"""Finite abelian groups, the dual pairing, and exact Fourier analysis.

A group is a product of cyclic factors Z/n_1 x ... x Z/n_k given by its
factor list; elements are reduced coordinate tuples.  The dual group is
represented by the same spec and identified through the bilinear pairing

    <alpha, x> = sum_j alpha_j x_j (m / n_j)  mod m,

so a character evaluates as alpha(x) = zeta_m ** pairing(g, alpha, x).
Functions on the group are plain dicts from coordinate tuples to exact
Cyclotomic values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .cyclotomic import Cyclotomic

Element = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """Z/n_1 x ... x Z/n_k with elements ordered lexicographically by coordinates."""

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(n) for n in self.factors)
        if any(n < 1 for n in factors):
            raise ValueError(f"cyclic factors must be >= 1, got {factors}")
        object.__setattr__(self, "factors", factors)

    @property
    def m(self) -> int:
        order = 1
        for n in self.factors:
            order *= n
        return order

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        return tuple(itertools.product(*(range(n) for n in self.factors)))

    @cached_property
    def _index(self) -> dict[Element, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def identity(self) -> Element:
        return (0,) * len(self.factors)

    def validate(self, elem: Element) -> None:
        if len(elem) != len(self.factors) or any(
            not 0 <= c < n for c, n in zip(elem, self.factors)
        ):
            raise ValueError(f"malformed element {elem!r} for factors {self.factors}")

    def index(self, elem: Element) -> int:
        try:
            return self._index[tuple(elem)]
        except KeyError:
            raise ValueError(
                f"malformed element {elem!r} for factors {self.factors}"
            ) from None

    def element(self, i: int) -> Element:
        return self.elements[i]

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factors))

    def neg(self, a: Element) -> Element:
        return tuple((-x) % n for x, n in zip(a, self.factors))

    def sub(self, a: Element, b: Element) -> Element:
        return tuple((x - y) % n for x, y, n in zip(a, b, self.factors))

    def scale(self, r: int, a: Element) -> Element:
        """r-fold multiple of a (the r-th power in multiplicative notation)."""
        return tuple((r * x) % n for x, n in zip(a, self.factors))

    def generators(self) -> tuple[Element, ...]:
        """The standard generating set: one unit vector per nontrivial factor."""
        gens = []
        for j, n in enumerate(self.factors):
            if n > 1:
                e = [0] * len(self.factors)
                e[j] = 1
                gens.append(tuple(e))
        return tuple(gens)

    def generates(self, gens: Iterable[Element]) -> bool:
        """True if the given elements generate the whole group."""
        span = {self.identity}
        frontier = [self.identity]
        gens = [tuple(g) for g in gens]
        for g in gens:
            self.validate(g)
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.add(cur, g)
                if nxt not in span:
                    span.add(nxt)
                    frontier.append(nxt)
        return len(span) == self.m


def pairing(group: GroupSpec, alpha: Element, x: Element) -> int:
    """Exponent e in Z/m with alpha(x) = zeta_m ** e; bilinear and nondegenerate."""
    group.validate(alpha)
    group.validate(x)
    m = group.m
    return sum(a * b * (m // n) for a, b, n in zip(alpha, x, group.factors)) % m


def delta(alpha: Element) -> int:
    """1 on the identity (trivial character), 0 elsewhere."""
    return 1 if all(c == 0 for c in alpha) else 0


def _check_domain(group: GroupSpec, f: Mapping[Element, Cyclotomic]) -> None:
    if len(f) != group.m or any(e not in f for e in group.elements):
        raise ValueError("function must be defined on every group element")


def dft(group: GroupSpec, f: Mapping[Element, Cyclotomic]) -> dict[Element, Cyclotomic]:
    """Exact Fourier transform fhat(x) = sum_alpha f(alpha) * zeta^<alpha,x>."""
    _check_domain(group, f)
    m = group.m
    out: dict[Element, Cyclotomic] = {}
    for x in group.elements:
        acc = Cyclotomic.zero(m)
        for a in group.elements:
            acc = acc + f[a].mul_root(pairing(group, a, x))
        out[x] = acc
    return out


def idft(group: GroupSpec, fhat: Mapping[Element, Cyclotomic]) -> dict[Element, Cyclotomic]:
    """Inverse transform f(alpha) = (1/m) sum_x fhat(x) * zeta^-<alpha,x>."""
    _check_domain(group, fhat)
    m = group.m
    out: dict[Element, Cyclotomic] = {}
    for a in group.elements:
        acc = Cyclotomic.zero(m)
        for x in group.elements:
            acc = acc + fhat[x].mul_root(-pairing(group, a, x))
        out[a] = acc.scale(Fraction(1, m))
    return out


def convolve(
    group: GroupSpec,
    f1: Mapping[Element, Cyclotomic],
    f2: Mapping[Element, Cyclotomic],
) -> dict[Element, Cyclotomic]:
    """(f1 * f2)(alpha) = sum over beta of f1(beta) f2(alpha - beta)."""
    _check_domain(group, f1)
    _check_domain(group, f2)
    m = group.m
    out: dict[Element, Cyclotomic] = {}
    for a in group.elements:
        acc = Cyclotomic.zero(m)
        for b in group.elements:
            acc = acc + f1[b] * f2[group.sub(a, b)]
        out[a] = acc
    return out
