"""Hankel determinants and J-fractions.

A moment sequence (mu_0, mu_1, ...) is linked to a continued fraction

    sum_k mu_k x^k = mu0 / (1 + a0 x - b1 x^2 / (1 + a1 x - b2 x^2 / ...))

and the leading Hankel determinants factor through the b-coefficients:

    det(mu_{i+j})_{0<=i,j<=n-1} = mu0^n b1^{n-1} b2^{n-2} ... b_{n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import TruncSeries, bernoulli, rat
from .linalg import MatrixR, det


@dataclass(frozen=True)
class MomentSeq:
    values: tuple[Fraction, ...]

    def __init__(self, values: Sequence):
        object.__setattr__(self, "values", tuple(rat(v) for v in values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]


@dataclass(frozen=True)
class JFraction:
    mu0: Fraction
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]  # b[i] represents b_{i+1}

    def __init__(self, mu0, a: Sequence, b: Sequence):
        object.__setattr__(self, "mu0", rat(mu0))
        object.__setattr__(self, "a", tuple(rat(x) for x in a))
        object.__setattr__(self, "b", tuple(rat(x) for x in b))


class DegenerateMomentsError(ValueError):
    """A leading Hankel determinant vanished during J-fraction extraction."""

    def __init__(self, index: int):
        super().__init__(f"Hankel determinant of order {index} vanishes; moment problem degenerate")
        self.index = index


def hankel_matrix(s: MomentSeq, n: int, offset: int = 0) -> MatrixR:
    """n x n matrix with entry (i, j) = s[i + j + offset]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    need = offset + max(0, 2 * n - 2)
    if n > 0 and need >= len(s):
        raise ValueError(f"moment sequence too short: need index {need}, have {len(s) - 1}")
    return MatrixR.build(n, n, lambda i, j: s[i + j + offset])


def hankel_det(s: MomentSeq, n: int, offset: int = 0) -> Fraction:
    if n == 0:
        return Fraction(1)
    return det(hankel_matrix(s, n, offset), "bareiss")


def jfraction_from_moments(s: MomentSeq, depth: int) -> JFraction:
    """Extract (mu0, a_0..a_{depth-1}, b_1..b_{depth-1}) from moments.

    Requires the leading Hankel determinants H_1..H_depth to be nonzero;
    aborts with DegenerateMomentsError at the first vanishing one.
    """
    if len(s) < 2 * depth:
        raise ValueError(f"need at least {2 * depth} moments for depth {depth}")
    if s[0] == 0:
        raise DegenerateMomentsError(1)
    order = len(s)
    f = TruncSeries(0, [v / s[0] for v in s.values], order)
    a: list[Fraction] = []
    b: list[Fraction] = []
    for k in range(depth):
        # 1/f_k = 1 + a_k x - b_{k+1} x^2 f_{k+1}
        g = f.inverse()
        a_k = g.coeff(1) if g.order > 1 else Fraction(0)
        a.append(a_k)
        if k == depth - 1:
            break
        rem = TruncSeries(0, [1, a_k] + [0] * (g.order - 2), g.order) - g
        # rem = b_{k+1} x^2 f_{k+1}
        if rem.order <= 2:
            raise ValueError("insufficient moments for requested depth")
        b_k1 = rem.coeff(2)
        if b_k1 == 0:
            raise DegenerateMomentsError(k + 2)
        coeffs = [rem.coeff(e) / b_k1 for e in range(2, rem.order)]
        f = TruncSeries(0, coeffs, rem.order - 2)
        b.append(b_k1)
    return JFraction(s[0], a, b)


def moments_from_jfraction(j: JFraction, count: int) -> MomentSeq:
    """Expand the continued fraction to `count` exact moments."""
    order = count
    if order <= 0:
        return MomentSeq([])
    if order == 1:
        return MomentSeq([j.mu0])
    levels = max(len(j.a), len(j.b) + 1)
    if 2 * levels + 1 < count:
        raise ValueError("J-fraction too shallow for requested moment count")
    # bottom level: f = 1/(1 + a_m x)
    f = TruncSeries.one(order)
    for k in range(levels - 1, -1, -1):
        a_k = j.a[k] if k < len(j.a) else Fraction(0)
        b_k1 = j.b[k] if k < len(j.b) else Fraction(0)
        den = TruncSeries(0, [1, a_k] + [0] * (order - 2), order) - b_k1 * TruncSeries(0, [0, 0] + list(f.coeffs[: order - 2]), order)
        f = den.inverse().restrict(order)
    f = j.mu0 * f
    return MomentSeq([f.coeff(k) for k in range(count)])


def heilermann_product(j: JFraction, n: int) -> Fraction:
    """mu0^n b1^{n-1} b2^{n-2} ... b_{n-1} — the order-n Hankel determinant."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n - 1 > len(j.b):
        raise ValueError(f"J-fraction depth insufficient: need b_1..b_{n-1}")
    out = j.mu0**n
    for i in range(1, n):
        out *= j.b[i - 1] ** (n - i)
    return out


def hankel_x_transform(s: MomentSeq, x, n: int) -> Fraction:
    """det of the binomially transformed Hankel matrix
    entry(i,j) = sum_k binom(i+j, k) s[k] x^(i+j-k); equals hankel_det(s, n)."""
    from .exactnum import binomial

    x = rat(x)
    if n == 0:
        return Fraction(1)
    need = 2 * n - 2
    if need >= len(s):
        raise ValueError("moment sequence too short")

    def entry(i, j):
        m = i + j
        return sum((binomial(m, k) * s[k] * x ** (m - k) for k in range(m + 1)), Fraction(0))

    return det(MatrixR.build(n, n, entry), "bareiss")


def bernoulli_shifted_moments(count: int, shift: int = 2) -> MomentSeq:
    """Moments mu_k = B_{k+shift}."""
    return MomentSeq([bernoulli(k + shift) for k in range(count)])


def continuous_hahn_jfraction(depth: int) -> JFraction:
    """The J-fraction whose moments are B_{k+2}: all a_k = 0 and
    b_i = -i(i+1)^2(i+2) / (4(2i+1)(2i+3)), with mu0 = 1/6."""
    b = [
        Fraction(-i * (i + 1) ** 2 * (i + 2), 4 * (2 * i + 1) * (2 * i + 3))
        for i in range(1, depth)
    ]
    return JFraction(Fraction(1, 6), [Fraction(0)] * depth, b)
