"""Jacobi-sum tables: frozen small values, identities, and twists."""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

import pytest

from jacobisum import (
    Cyclotomic,
    GroupSpec,
    JacobiTable,
    approximate,
    compute_jacobi,
    convolve,
    delta,
    jacobi_star,
    root_power,
    slice_function,
    table_from_support,
    twist_automorphism,
    twist_galois,
    verify_all,
)

from helpers import field, table


def _float_jacobi(f):
    """Independent oracle: the defining double sum in complex floats."""
    m = f.q - 1
    out = [[0j] * m for _ in range(m)]
    for x in f.elements:
        if x == f.zero:
            continue
        y = f.sub(f.one, x)
        if y == f.zero:
            continue
        dx, dy = f.dlog(x), f.dlog(y)
        for a in range(m):
            for b in range(m):
                out[a][b] += cmath.exp(2j * cmath.pi * ((a * dx + b * dy) % m) / m)
    return [[v / m for v in row] for row in out]


def test_f3_table_frozen():
    # single pair (2, 2) solves x + y = 1 in F_3*, so J(a, b) = (-1)^(a+b)/2
    t = table(3)
    half = Cyclotomic.from_rational(2, Fraction(1, 2))
    assert t.values[0][0] == half
    assert t.values[0][1] == -half
    assert t.values[1][0] == -half
    assert t.values[1][1] == half


def test_f4_table_frozen():
    # pairs (t, t^2) and (t^2, t); J(a, b) = 2/3 when a = b, else -1/3
    t = table(4)
    two_thirds = Cyclotomic.from_rational(3, Fraction(2, 3))
    minus_third = Cyclotomic.from_rational(3, Fraction(-1, 3))
    for a in range(3):
        for b in range(3):
            assert t.values[a][b] == (two_thirds if a == b else minus_third)


def test_trivial_character_value():
    # all q - 2 terms collapse to 1 at the trivial character pair
    for q in (3, 4, 5, 7, 8, 9, 13):
        t = table(q)
        m = q - 1
        assert t.values[0][0] == Cyclotomic.from_rational(m, Fraction(q - 2, q - 1))


def test_against_float_oracle():
    for q in (5, 8, 9):
        f = field(q)
        exact = table(q)
        approx = _float_jacobi(f)
        for a in range(q - 1):
            for b in range(q - 1):
                assert abs(exact.values[a][b].to_complex() - approx[a][b]) < 1e-10


def test_symmetry_of_classical_tables():
    for q in (5, 8, 9, 13):
        t = table(q)
        m = q - 1
        for a in range(m):
            for b in range(m):
                assert t.values[a][b] == t.values[b][a]


def test_entries_are_integral_after_scaling():
    # m * J is an algebraic integer: every denominator divides m
    for q in (5, 9, 16):
        t = table(q)
        m = q - 1
        for row in t.values:
            for e in row:
                assert m % e.den == 0


def test_jacobi_star_values():
    t = table(3)
    m32 = Cyclotomic.from_rational(2, Fraction(-3, 2))
    assert jacobi_star(t, (0,), (0,)) == m32
    assert jacobi_star(t, (0,), (1,)) == m32
    assert jacobi_star(t, (1,), (1,)) == t.values[1][1]  # deltas vanish
    g1 = GroupSpec((1,))
    t1 = JacobiTable(g1, [[Cyclotomic.one(1)]])
    assert jacobi_star(t1, (0,), (0,)) == Cyclotomic.from_rational(1, -1)


def test_slice_function():
    t = table(3)
    q1 = slice_function(t, (0,))
    half = Cyclotomic.from_rational(2, Fraction(1, 2))
    assert q1 == {(0,): half, (1,): half}
    # J(alpha, beta) = Q_{alpha beta}(beta) by definition
    t5 = table(5)
    g = t5.group
    for alpha in g.elements:
        for beta in g.elements:
            q = slice_function(t5, g.add(alpha, beta))
            assert q[beta] == t5.value(alpha, beta)


def test_slice_convolution_identity():
    # Q_alpha * Q_beta = Q_{alpha beta}, exhaustively for m <= 8
    for q in (5, 8, 9):
        t = table(q)
        g = t.group
        for alpha in g.elements:
            q_a = slice_function(t, alpha)
            for beta in g.elements:
                lhs = convolve(g, q_a, slice_function(t, beta))
                assert lhs == slice_function(t, g.add(alpha, beta))


def test_inverse_pair_special_value():
    # J(alpha, alpha^-1) = delta(alpha) - alpha(-1)/m with alpha(-1) via dlog
    for q in (3, 4, 5, 7, 9, 13):
        f = field(q)
        t = table(q)
        m = q - 1
        c = f.dlog(f.neg(f.one))
        g = t.group
        for alpha in g.elements:
            a = alpha[0]
            expected = (
                Cyclotomic.from_rational(m, delta(alpha))
                - root_power(m, a * c).scale(Fraction(1, m))
            )
            assert t.value(alpha, g.neg(alpha)) == expected


def test_twist_automorphism_examples():
    t = table(5)
    assert twist_automorphism(t, 1) == t
    g = t.group
    inverted = twist_automorphism(t, 3)  # 3 = -1 mod 4
    for alpha in g.elements:
        for beta in g.elements:
            assert inverted.value(alpha, beta) == t.value(g.neg(alpha), g.neg(beta))
    assert verify_all(twist_automorphism(t, 3)).passed


def test_twist_galois_examples():
    t = table(5)
    assert twist_galois(t, 1) == t
    conjugated = twist_galois(t, 3)  # r = m - 1 conjugates every entry
    for a in range(4):
        for b in range(4):
            assert conjugated.values[a][b] == t.values[a][b].conjugate()


def test_twists_agree_on_classical_tables():
    for q in (5, 7, 9, 13):
        t = table(q)
        m = q - 1
        for r in range(1, m):
            if math.gcd(r, m) == 1:
                assert twist_automorphism(t, r) == twist_galois(t, r)


def test_twists_preserve_axioms():
    t = table(7)
    for r in (1, 5):
        assert verify_all(twist_automorphism(t, r)).passed
        assert verify_all(twist_galois(t, r)).passed


def test_twist_rejects_non_automorphism():
    t = table(5)
    with pytest.raises(ValueError):
        twist_automorphism(t, 2)
    with pytest.raises(ValueError):
        twist_galois(t, 2)


def test_table_from_support_matches_classical():
    # the F_3 table comes from support {1} with i(1) = g
    g = GroupSpec((2,))
    rebuilt = table_from_support(g, [(0,)], {(0,): (1,)})
    assert rebuilt == table(3)


def test_table_validation():
    g = GroupSpec((2,))
    with pytest.raises(ValueError):
        JacobiTable(g, [[Cyclotomic.one(2)]])
    with pytest.raises(ValueError):
        JacobiTable(g, [[Cyclotomic.one(3)] * 2] * 2)


def test_threads_do_not_change_output():
    f = field(9)
    assert compute_jacobi(f, threads=3) == compute_jacobi(f)


def test_approximate_embedding():
    t = table(4)
    at = approximate(t)
    assert at.group == t.group
    assert abs(at.entry(0, 0) - (2 / 3)) < 1e-12


def test_random_tables_are_not_jacobi():
    rng = random.Random(9)
    g = GroupSpec((3,))
    rows = [
        [Cyclotomic.from_rational(3, Fraction(rng.randint(-6, 6), 2)) for _ in range(3)]
        for _ in range(3)
    ]
    t = JacobiTable(g, rows)
    report = verify_all(t)
    assert not report.passed
