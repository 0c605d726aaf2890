"""Tests for sequence-law guessing and exact interpolation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detkit.exactnum import PolyQ, RatFn, catalan, factorial, special_sequence
from detkit.guess import (ZeroTermError, fit_rational, lagrange_interpolate,
                          linear_factors, rate_guess)

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=5)


def test_lagrange_anchor():
    pts = [(Fraction(0), Fraction(1)), (Fraction(1), Fraction(2)),
           (Fraction(2), Fraction(5))]
    p = lagrange_interpolate(pts)
    assert p == PolyQ([1, 0, 1])


@given(st.lists(rationals, min_size=1, max_size=5))
@settings(max_examples=30, deadline=None)
def test_lagrange_reconstructs_poly(coeffs):
    p = PolyQ(coeffs)
    deg = max(p.degree, 0)
    pts = [(Fraction(k), p(Fraction(k))) for k in range(deg + 1)]
    assert lagrange_interpolate(pts) == p


def test_fit_rational():
    f = RatFn(PolyQ([1, 1]), PolyQ([2, 0, 1]))
    pts = [(Fraction(k), f(Fraction(k))) for k in range(8)]
    got = fit_rational(pts)
    assert got is not None
    for x in (Fraction(11), Fraction(-3, 2)):
        assert got(x) == f(x)


def test_fit_rational_rejects_noise():
    pts = [(Fraction(k), Fraction(2) ** (k * k)) for k in range(8)]
    assert fit_rational(pts) is None


def test_rate_guess_constant_and_factorial():
    # [TRIVIAL] identity law on 1, 2, 3
    gs = rate_guess([Fraction(k) for k in (1, 2, 3)])
    assert gs and str(gs[0]) == "n -> n"
    assert [gs[0].evaluate(k) for k in range(1, 4)] == [1, 2, 3]
    # factorials: ratio n is a polynomial in n
    gs = rate_guess([Fraction(factorial(k)) for k in range(1, 8)])
    assert gs
    assert gs[0].evaluate(9) == factorial(9)


def test_rate_guess_catalan_extends():
    gs = rate_guess([catalan(k) for k in range(1, 9)])
    assert gs
    for n in range(9, 13):
        assert gs[0].evaluate(n) == catalan(n)


def test_rate_guess_rejects_fibonacci():
    terms = [Fraction(x) for x in (1, 1, 2, 3, 5, 8)]
    assert rate_guess(terms) == []


def test_rate_guess_zero_term():
    with pytest.raises(ZeroTermError):
        rate_guess([Fraction(1), Fraction(0), Fraction(2)])


def test_rate_guess_asm_sequence():
    # [PAPER] the 8 seed terms pin down the product law exactly
    terms = [Fraction(x) for x in
             (1, 2, 7, 42, 429, 7436, 218348, 10850216)]
    gs = rate_guess(terms)
    assert gs
    for n in range(9, 13):
        assert gs[0].evaluate(n) == special_sequence("asm", n)


def test_linear_factors():
    p = PolyQ([0, 1]) * PolyQ([2, 1]) ** 2 * PolyQ([3, 0, 1])
    factors, cofactor = linear_factors(p)
    assert dict(factors) == {Fraction(0): 1, Fraction(-2): 2}
    assert cofactor == PolyQ([3, 0, 1])
