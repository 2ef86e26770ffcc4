"""Degenerate layer: falling factorials, degenerate/extended Stirling, Bell."""

from fractions import Fraction
from math import comb, factorial, perm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenbell.classical import X, XPolynomial, bell_poly, r_s2, s2
from degenbell.degenerate import (
    DegStirlingValue,
    ExtMethod,
    bell_deg_poly,
    bell_ext_poly,
    bell_series_eval,
    deg_falling,
    dobinski_direct,
    dobinski_numeric,
    s2_deg,
    s2_deg_closed,
    s2_ext,
)
from degenbell.scalars import LAMBDA, SYMBOLIC, LambdaPoly, fixed_ring, poly_degree

RING0 = fixed_ring(0)
RING1 = fixed_ring(1)
RING_HALF = fixed_ring(Fraction(1, 2))
RING_NTHIRD = fixed_ring(Fraction(-1, 3))
FIXED_RINGS = [RING0, RING1, RING_HALF, RING_NTHIRD, fixed_ring(Fraction(7, 5))]
ALL_RINGS = FIXED_RINGS + [SYMBOLIC]


def test_deg_falling_frozen():
    assert deg_falling(RING_HALF, 2, 2) == 3
    assert deg_falling(RING_HALF, 3, 2) == Fraction(15, 2)
    assert deg_falling(SYMBOLIC, 1, 3) == LambdaPoly([1, -3, 2])
    assert deg_falling(RING0, 5, 4) == 5**4
    assert deg_falling(RING1, 5, 3) == 5 * 4 * 3
    assert deg_falling(SYMBOLIC, 7, 0) == 1


def test_deg_falling_polynomial_argument():
    p = deg_falling(SYMBOLIC, X + 1, 2)
    assert p.coefficient(2) == 1
    assert p.coefficient(1) == 2 - LAMBDA
    assert p.coefficient(0) == 1 - LAMBDA
    q = deg_falling(RING1, X, 3)
    assert q == X * (X - 1) * (X - 2)


@given(st.integers(0, 8), st.fractions(min_value=-3, max_value=3, max_denominator=5))
@settings(max_examples=60)
def test_deg_falling_recurrence(n, a):
    # (a|lam)_{n+1} = (a|lam)_n * (a - n lam)
    lam = Fraction(1, 2)
    ring = fixed_ring(lam)
    assert deg_falling(ring, a, n + 1) == deg_falling(ring, a, n) * (a - n * lam)


def test_s2_deg_frozen_symbolic():
    assert s2_deg(SYMBOLIC, 2, 1) == 1 - LAMBDA
    assert s2_deg(SYMBOLIC, 3, 2) == 3 - 3 * LAMBDA
    assert s2_deg(SYMBOLIC, 3, 3) == 1
    assert s2_deg(SYMBOLIC, 4, 1) == (1 - LAMBDA) * (1 - 2 * LAMBDA) * (1 - 3 * LAMBDA)


def test_s2_deg_limits():
    for n in range(11):
        for k in range(n + 1):
            assert s2_deg(RING0, n, k) == s2(n, k)
            assert s2_deg(RING1, n, k) == (1 if n == k else 0)


def test_s2_deg_evaluation_commutes():
    for ring in (RING_HALF, RING_NTHIRD):
        for n in range(9):
            for k in range(n + 1):
                sym = s2_deg(SYMBOLIC, n, k)
                assert sym(ring.lam) == s2_deg(ring, n, k)


def test_s2_deg_bounds():
    with pytest.raises(ValueError):
        s2_deg(RING0, 3, 4)
    with pytest.raises(ValueError):
        s2_deg(RING0, -1, 0)


def test_s2_deg_closed_matches_series():
    for ring in ALL_RINGS:
        for n in range(9):
            for k in range(n + 1):
                assert s2_deg_closed(ring, n, k) == s2_deg(ring, n, k)


def test_s2_ext_value_metadata():
    v = s2_ext(SYMBOLIC, 2, 1, 1)
    assert isinstance(v, DegStirlingValue)
    assert (v.n, v.k, v.r, v.method) == (2, 1, 1, ExtMethod.SERIES)
    assert v.value == 3 - LAMBDA


def test_s2_ext_all_methods_on_known_value():
    for method in ExtMethod:
        assert s2_ext(SYMBOLIC, 2, 1, 1, method).value == 3 - LAMBDA
        assert s2_ext(RING_HALF, 2, 1, 1, method).value == Fraction(5, 2)


def test_s2_ext_accepts_method_strings():
    assert s2_ext(RING0, 3, 2, 1, "thm1").method is ExtMethod.THM1
    assert s2_ext(RING0, 3, 2, 1, "binom-closed-form").method is ExtMethod.BINOM
    with pytest.raises(ValueError, match="valid:"):
        s2_ext(RING0, 3, 2, 1, "newton")
    with pytest.raises(ValueError):
        s2_ext(RING0, -1, 0, 0)


def test_s2_ext_five_way_agreement_small():
    for ring in ALL_RINGS:
        for n in range(7):
            for k in range(n + 1):
                for r in range(3):
                    values = {
                        method: s2_ext(ring, n, k, r, method).value
                        for method in ExtMethod
                    }
                    base = values[ExtMethod.SERIES]
                    assert all(v == base for v in values.values()), (ring, n, k, r)


def test_s2_ext_r0_is_s2_deg():
    for ring in ALL_RINGS:
        for n in range(8):
            for k in range(n + 1):
                assert s2_ext(ring, n, k, 0).value == s2_deg(ring, n, k)


def test_s2_ext_lambda0_is_r_stirling():
    for n in range(9):
        for k in range(n + 1):
            for r in range(4):
                assert s2_ext(RING0, n, k, r).value == r_s2(n, k, r)


def test_s2_ext_lambda1_closed_form():
    for n in range(9):
        for k in range(n + 1):
            for r in range(5):
                expect = comb(n, k) * perm(r, n - k) if n - k <= r else 0
                assert s2_ext(RING1, n, k, r).value == expect


def test_s2_ext_symbolic_degree():
    for n in range(9):
        for k in range(n + 1):
            for r in range(3):
                assert poly_degree(s2_ext(SYMBOLIC, n, k, r).value) <= n - k


def test_bell_deg_poly_reductions():
    for n in range(9):
        assert bell_deg_poly(RING0, n).poly == bell_poly(n)
    b = bell_deg_poly(SYMBOLIC, 2)
    assert b.poly.coefficient(1) == 1 - LAMBDA
    assert b.poly.coefficient(2) == 1
    assert (b.n, b.r) == (2, 0)


def test_bell_ext_poly_frozen():
    b = bell_ext_poly(RING_HALF, 2, 1)
    assert b.poly.to_jsonable() == ["1/2", "5/2", "1"]
    assert b(2) == Fraction(19, 2)
    assert (b.n, b.r) == (2, 1)


def test_bell_ext_poly_r0():
    for ring in ALL_RINGS:
        for n in range(7):
            assert bell_ext_poly(ring, n, 0).poly == bell_deg_poly(ring, n).poly


def test_bell_series_eval_matches_polynomial():
    for ring in (RING_HALF, RING_NTHIRD):
        for n in range(8):
            for r in range(3):
                poly = bell_ext_poly(ring, n, r)
                for a in (Fraction(1, 2), Fraction(2), Fraction(-1)):
                    assert bell_series_eval(ring, n, r, a) == poly(a)


def test_bell_series_eval_rejects():
    with pytest.raises(ValueError):
        bell_series_eval(SYMBOLIC, 2, 0, 1)
    with pytest.raises(ValueError):
        bell_series_eval(RING0, 3, 0, 1, order=2)
    with pytest.raises(ValueError):
        bell_series_eval(RING0, -1, 0, 1)


def test_dobinski_numeric_bell_numbers():
    # lambda = 0, r = 0, x = 1 specializes to the classical Bell numbers
    bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    for n, b in enumerate(bell):
        assert abs(dobinski_numeric(RING0, n, 0, 1) - b) <= 1e-9


def test_dobinski_numeric_vs_exact():
    for lam in (Fraction(0), Fraction(1, 2), Fraction(-1, 3)):
        ring = fixed_ring(lam)
        for n in range(7):
            for r in range(3):
                exact = bell_ext_poly(ring, n, r)
                for a in (Fraction(1, 2), Fraction(1), Fraction(2)):
                    approx = dobinski_numeric(ring, n, r, a)
                    assert abs(Fraction(approx) - exact(a)) <= 1e-9, (lam, n, r, a)


def test_dobinski_numeric_tight_tolerance():
    exact = bell_ext_poly(RING_HALF, 5, 2)(Fraction(2))
    approx = dobinski_numeric(RING_HALF, 5, 2, 2, tol=Fraction(1, 10**12))
    assert abs(Fraction(approx) - exact) <= Fraction(1, 10**12)


def test_dobinski_direct_matches_bell_deg():
    for lam in (Fraction(0), Fraction(1, 2), Fraction(-1, 3)):
        ring = fixed_ring(lam)
        for n in range(7):
            exact = bell_deg_poly(ring, n)
            for a in (Fraction(1, 2), Fraction(1), Fraction(2)):
                approx = dobinski_direct(ring, n, a)
                assert abs(Fraction(approx) - exact(a)) <= 1e-9, (lam, n, a)


def test_dobinski_rejects():
    with pytest.raises(ValueError):
        dobinski_numeric(SYMBOLIC, 2, 0, 1)
    with pytest.raises(ValueError):
        dobinski_numeric(RING0, 2, 0, 0)
    with pytest.raises(ValueError):
        dobinski_numeric(RING0, 2, 0, -1)
    with pytest.raises(ValueError):
        dobinski_numeric(RING0, 2, 0, 1, tol=0)
    with pytest.raises(ValueError):
        dobinski_direct(RING0, 2, Fraction(-1, 2))
