"""Oracle and property tests for Hankel determinants and J-fraction
moment expansions."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detkit.exactnum import bernoulli, catalan
from detkit.hankel import (DegenerateMomentsError, JFraction, MomentSeq,
                           bernoulli_shifted_moments, continuous_hahn_jfraction,
                           hankel_det, hankel_matrix, hankel_x_transform,
                           heilermann_product, jfraction_from_moments,
                           moments_from_jfraction)


def test_hankel_matrix_shape():
    s = MomentSeq([Fraction(k) for k in range(10)])
    m = hankel_matrix(s, 3, offset=2)
    assert m.rows == 3 and m[0, 0] == 2 and m[2, 2] == 6 and m[0, 2] == 4


def test_catalan_hankel_is_one():
    # [DERIVED] both principal Hankel determinants of the Catalan
    # sequence equal 1 for every order
    s = MomentSeq([catalan(k) for k in range(12)])
    for n in range(1, 6):
        assert hankel_det(s, n) == 1
        assert hankel_det(s, n, offset=1) == 1


def test_bernoulli_shifted_moments():
    s = bernoulli_shifted_moments(6, shift=2)
    assert s[0] == Fraction(1, 6)
    assert list(s) == [bernoulli(k + 2) for k in range(6)]
    # [PAPER] first two shifted Hankel values
    assert hankel_det(s, 1) == Fraction(1, 6)
    assert hankel_det(s, 2) == Fraction(-1, 180)


def test_jfraction_roundtrip():
    # moments -> J-fraction -> moments is the identity
    rng = random.Random(3)
    for _ in range(10):
        depth = rng.randint(2, 5)
        j = JFraction(
            Fraction(rng.randint(1, 5)),
            tuple(Fraction(rng.randint(-4, 4)) for _ in range(depth)),
            tuple(Fraction(rng.randint(1, 5)) for _ in range(depth - 1)))
        s = moments_from_jfraction(j, 2 * depth)
        back = jfraction_from_moments(s, depth)
        assert back.mu0 == j.mu0
        assert tuple(back.a) == tuple(j.a)
        assert tuple(back.b) == tuple(j.b[:depth - 1])


def test_heilermann_matches_hankel():
    rng = random.Random(9)
    for _ in range(10):
        depth = 4
        j = JFraction(
            Fraction(rng.randint(1, 6)),
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(depth)),
            tuple(Fraction(rng.randint(1, 4)) for _ in range(depth - 1)))
        s = moments_from_jfraction(j, 2 * depth)
        for n in range(1, depth + 1):
            assert heilermann_product(j, n) == hankel_det(s, n)


def test_degenerate_moments_detected():
    s = MomentSeq([Fraction(1), Fraction(0), Fraction(0), Fraction(0)])
    with pytest.raises(DegenerateMomentsError):
        jfraction_from_moments(s, 2)


def test_continuous_hahn_coefficients():
    # [PAPER] b_i = -i (i+1)^2 (i+2) / (4 (2i+1) (2i+3)), mu0 = 1/6
    j = continuous_hahn_jfraction(6)
    assert j.mu0 == Fraction(1, 6)
    for i, b in enumerate(j.b, start=1):
        assert b == Fraction(-i * (i + 1) ** 2 * (i + 2),
                             4 * (2 * i + 1) * (2 * i + 3))
    # and it reproduces the shifted moment sequence
    s = bernoulli_shifted_moments(10, shift=2)
    assert list(moments_from_jfraction(j, 10)) == list(s)


def test_hankel_x_transform():
    # binomial transform with x leaves the Hankel determinant unchanged
    rng = random.Random(5)
    vals = [Fraction(rng.randint(-5, 5)) for _ in range(9)]
    s = MomentSeq(vals)
    for n in range(1, 5):
        assert hankel_x_transform(s, Fraction(2, 3), n) == hankel_det(s, n)


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=3),
                min_size=9, max_size=9))
@settings(max_examples=25, deadline=None)
def test_hankel_x_transform_property(vals):
    s = MomentSeq(vals)
    assert hankel_x_transform(s, Fraction(-1, 2), 4) == hankel_det(s, 4)
