"""Oracle and property tests for exact-rational matrices: determinant
strategies, permanent, Pfaffian, LU, kernels, characteristic polynomial,
and resultants."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detkit.exactnum import PolyQ
from detkit.linalg import (MatrixR, char_poly, det, det_permutation_expansion,
                           kernel_basis, lu_decompose, permanent, pfaffian,
                           resultant, solve_linear)

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def _rand_matrix(rng, n, lo=-9, hi=9):
    return MatrixR.from_rows(
        [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)])


def square(n):
    return st.lists(st.lists(rationals, min_size=n, max_size=n),
                    min_size=n, max_size=n).map(MatrixR.from_rows)


# ---------------------------------------------------------------------------
# determinant


def test_det_anchors():
    # [TRIVIAL] 2x2 and identity
    m = MatrixR.from_rows([[1, 2], [3, 4]])
    assert det(m) == -2
    assert det(MatrixR.identity(5)) == 1
    assert det(MatrixR.from_rows([[Fraction(0)]])) == 0


def test_det_strategies_agree():
    rng = random.Random(4)
    for _ in range(15):
        n = rng.randint(1, 5)
        m = _rand_matrix(rng, n)
        reference = det(m, "bareiss")
        for strategy in ("gauss", "laplace", "condensation"):
            assert det(m, strategy) == reference
        assert det_permutation_expansion(m) == reference


@given(square(3), square(3))
@settings(max_examples=40, deadline=None)
def test_det_multiplicative(a, b):
    assert det(a * b) == det(a) * det(b)


@given(square(4))
@settings(max_examples=40, deadline=None)
def test_det_transpose(m):
    assert det(m.transpose()) == det(m)


def test_vandermonde_oracle():
    # [DERIVED] difference product for a 4-point power matrix
    xs = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-3)]
    m = MatrixR.build(4, 4, lambda i, j: xs[i] ** j)
    expect = Fraction(1)
    for i in range(4):
        for j in range(i + 1, 4):
            expect *= xs[j] - xs[i]
    assert det(m) == expect


# ---------------------------------------------------------------------------
# permanent, Pfaffian


def test_permanent_anchor():
    # [TRIVIAL] per [[1,2],[3,4]] = 10; per(J_3) = 3! = 6
    assert permanent(MatrixR.from_rows([[1, 2], [3, 4]])) == 10
    assert permanent(MatrixR.build(3, 3, lambda i, j: Fraction(1))) == 6


def test_pfaffian_anchors():
    # [TRIVIAL] canonical symplectic block has Pfaffian +1
    assert pfaffian(MatrixR.from_rows([[0, 1], [-1, 0]])) == 1
    m = MatrixR.from_rows([
        [0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]])
    # [DERIVED] Pf = a12 a34 - a13 a24 + a14 a23 = 6 - 10 + 12
    assert pfaffian(m) == 8
    assert det(m) == 64


def test_pfaffian_squared_is_det():
    rng = random.Random(7)
    for _ in range(10):
        n2 = 2 * rng.randint(1, 4)
        raw = [[Fraction(rng.randint(-5, 5)) for _ in range(n2)] for _ in range(n2)]
        m = MatrixR.build(n2, n2,
                          lambda i, j: raw[i][j] if i < j
                          else (-raw[j][i] if i > j else Fraction(0)))
        for strategy in ("expansion", "matching_sum"):
            assert pfaffian(m, strategy) ** 2 == det(m)


def test_pfaffian_odd_dim_rejected():
    with pytest.raises(ValueError):
        pfaffian(MatrixR.from_rows([[0]]))


# ---------------------------------------------------------------------------
# LU, solving, kernels


def test_lu_decompose_roundtrip():
    # contract: M * U = L with U unit upper triangular, prod diag(L) = det
    rng = random.Random(11)
    for _ in range(10):
        n = rng.randint(1, 5)
        m = _rand_matrix(rng, n)
        try:
            lower, upper = lu_decompose(m)
        except ValueError:
            continue  # decomposition requires nonzero leading minors
        assert m * upper == lower
        diag = Fraction(1)
        for j in range(n):
            assert all(lower[i, j] == 0 for i in range(j))
            assert upper[j, j] == 1
            diag *= lower[j, j]
        assert diag == det(m)


def test_solve_linear():
    a = MatrixR.from_rows([[2, 1], [1, 3]])
    x = solve_linear(a, [Fraction(5), Fraction(10)])
    assert list(a.mul_vector(x)) == [Fraction(5), Fraction(10)]


def test_kernel_basis():
    # rank-1 matrix has a 2-dimensional kernel in dimension 3
    m = MatrixR.from_rows([[1, 2, 3], [2, 4, 6], [3, 6, 9]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert all(c == 0 for c in m.mul_vector(v))
    assert kernel_basis(MatrixR.identity(3)) == []


# ---------------------------------------------------------------------------
# characteristic polynomial, resultant


def test_char_poly_anchor():
    m = MatrixR.from_rows([[2, 1], [1, 2]])
    # [DERIVED] (x-1)(x-3)
    assert char_poly(m) == PolyQ([3, -4, 1])


@given(square(3))
@settings(max_examples=30, deadline=None)
def test_char_poly_constant_term(m):
    p = char_poly(m)
    assert p.leading() == 1
    assert p.coeff(0) == (-1) ** 3 * det(m)


def test_resultant_anchor():
    # [DERIVED] res(x^2-1, x^2-4) = 9; common root makes it vanish
    assert resultant(PolyQ([-1, 0, 1]), PolyQ([-4, 0, 1])) == 9
    assert resultant(PolyQ([-1, 1]), PolyQ([-1, 0, 1])) == 0


def test_submatrix_minor():
    m = MatrixR.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert m.minor(0, 0) == MatrixR.from_rows([[5, 6], [8, 10]])
    assert m.submatrix([0, 2], [1, 2]) == MatrixR.from_rows([[2, 3], [8, 10]])
    assert m[2, 2] == 10
