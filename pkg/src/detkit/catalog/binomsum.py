"""Determinants whose entries are binomials binom(mu+i+j, 2i-j) or sums
of two such binomials, together with the even/odd factorization of the
perturbed-identity variant."""

from __future__ import annotations

from fractions import Fraction

from ..exactnum import binomial, pochhammer, rat
from ..linalg import MatrixR, det
from .base import (IdentityRecord, det_record, prod, rand_frac, register)


def _dfact(m: int) -> Fraction:
    out = 1
    while m > 0:
        out *= m
        m -= 2
    return Fraction(out)


def _sign_mod4(n: int) -> int:
    """(-1)^(n==3 mod 4)."""
    return -1 if n % 4 == 3 else 1


# ---------------------------------------------------------------------------
# the factorization Z_{2n} = T_n R_n, Z_{2n-1} = 2 T_n R_{n-1}


def _build_z(n, x, mu, nu):
    x, mu, nu = rat(x), rat(mu), rat(nu)

    def entry(i, j):
        out = Fraction(1) if i == j else Fraction(0)
        for t in range(n):
            for k in range(n):
                if k >= t:
                    out += (binomial(mu + i, t) * binomial(nu + k, k - t)
                            * binomial(mu + j - k - 1, j - k) * x ** (k - t))
        return out
    return MatrixR.build(n, n, entry)


def _build_t(n, x, mu, nu):
    x, mu, nu = rat(x), rat(mu), rat(nu)

    def entry(i, j):
        out = Fraction(0)
        for t in range(i, 2 * j + 1):
            out += (binomial(mu + i, t - i) * binomial(nu + j, 2 * j - t)
                    * x ** (2 * j - t))
        return out
    return MatrixR.build(n, n, entry)


def _build_r(n, x, mu, nu):
    x, mu, nu = rat(x), rat(mu), rat(nu)

    def entry(i, j):
        out = Fraction(0)
        for t in range(i, 2 * j + 2):
            out += ((binomial(mu + i, t - i - 1) + binomial(mu + i + 1, t - i))
                    * (binomial(nu + j, 2 * j + 1 - t)
                       + binomial(nu + j + 1, 2 * j + 1 - t))
                    * x ** (2 * j + 1 - t))
        return out
    return MatrixR.build(n, n, entry)


def _mrr_factor_trial(rng, n):
    params = {"x": rand_frac(rng), "mu": rand_frac(rng), "nu": rand_frac(rng)}
    x, mu, nu = params["x"], params["mu"], params["nu"]
    z_even = det(_build_z(2 * n, x, mu, nu))
    z_odd = det(_build_z(2 * n - 1, x, mu, nu))
    t_n = det(_build_t(n, x, mu, nu / 2))
    r_n = det(_build_r(n, x, mu, nu / 2))
    r_prev = det(_build_r(n - 1, x, mu, nu / 2))
    lhs = (z_even, z_odd)
    rhs = (t_n * r_n, 2 * t_n * r_prev)
    return params, lhs, rhs


register(IdentityRecord(id="mrr-factor", trial=_mrr_factor_trial, max_n=2))


# ---------------------------------------------------------------------------
# binom(mu+i+j, 2i-j) and relatives (all 0-based)


def _sample_mu(rng, n):
    return {"mu": rand_frac(rng)}


def _build_mrr(n, mu):
    mu = rat(mu)
    return MatrixR.build(n, n, lambda i, j: binomial(mu + i + j, 2 * i - j))


def _closed_mrr(n, mu):
    mu = rat(mu)
    out = Fraction(_sign_mod4(n)) * Fraction(2) ** ((n - 1) * (n - 2) // 2)
    for i in range(1, n):
        out *= pochhammer(mu + i + 1, (i + 1) // 2)
        out *= pochhammer(-mu - 3 * n + i + Fraction(3, 2), i // 2)
        out /= pochhammer(i, i)
    return out


det_record("mrr", _sample_mu, _build_mrr, _closed_mrr, max_n=5)


def _build_rn(n, mu):
    mu = rat(mu)
    return MatrixR.build(
        n, n,
        lambda i, j: binomial(mu + i + j, 2 * i - j)
        + 2 * binomial(mu + i + j + 2, 2 * i - j + 1))


def _closed_rn(n, mu):
    mu = rat(mu)
    out = Fraction(2) ** n
    for i in range(1, n + 1):
        out *= pochhammer(mu + i, i // 2)
        out *= pochhammer(mu + 3 * n - (3 * i - 1) // 2 + Fraction(1, 2),
                          (i + 1) // 2)
        out /= _dfact(2 * i - 1)
    return out


det_record("rn", _sample_mu, _build_rn, _closed_rn, max_n=5)


def _sample_xy(rng, n):
    return {"x": rand_frac(rng), "y": rand_frac(rng)}


def _build_ab(n, x, y):
    x, y = rat(x), rat(y)
    return MatrixR.build(
        n, n,
        lambda i, j: binomial(x + i + j, 2 * i - j) + binomial(y + i + j, 2 * i - j))


def _closed_ab(n, x, y):
    c = (rat(x) + rat(y)) / 2
    out = Fraction(_sign_mod4(n)) * Fraction(2) ** (n * (n - 1) // 2 + 1)
    for i in range(1, n):
        out *= pochhammer(c + i + 1, (i + 1) // 2)
        out *= pochhammer(-c - 3 * n + i + Fraction(3, 2), i // 2)
        out /= pochhammer(i, i)
    return out


det_record("ab", _sample_xy, _build_ab, _closed_ab, max_n=5)


def _sample_chu1(rng, n):
    return {"c": rand_frac(rng),
            "x": tuple(rand_frac(rng) for _ in range(n))}


def _build_chu1(n, c, x):
    c = rat(c)
    x = [rat(v) for v in x]
    return MatrixR.build(
        n, n,
        lambda i, j: binomial(c + x[i] + i + j, 2 * i - j)
        + binomial(c - x[i] + i + j, 2 * i - j))


def _closed_chu1(n, c, x):
    c = rat(c)
    out = Fraction(_sign_mod4(n)) * Fraction(2) ** (n * (n - 1) // 2 + 1)
    for i in range(1, n):
        out *= pochhammer(c + i + 1, (i + 1) // 2)
        out *= pochhammer(-c - 3 * n + i + Fraction(3, 2), i // 2)
        out /= pochhammer(i, i)
    return out


det_record("chu1", _sample_chu1, _build_chu1, _closed_chu1, max_n=5)


def _sample_c(rng, n):
    return {"c": rand_frac(rng)}


def _build_chu2(n, c):
    c = rat(c)

    def entry(i, j):
        num = (2 * i - j) + (2 * c + 3 * j + 1) * (2 * c + 3 * j - 1)
        den = (c + i + j + Fraction(1, 2)) * (c + i + j - Fraction(1, 2))
        return num / den * binomial(c + i + j + Fraction(1, 2), 2 * i - j)
    return MatrixR.build(n, n, entry)


def _closed_chu2(n, c):
    c = rat(c)
    out = Fraction(_sign_mod4(n)) * Fraction(2) ** (n * (n + 1) // 2 + 1)
    for i in range(1, n):
        out *= pochhammer(c + i + Fraction(1, 2), (i + 1) // 2)
        out *= pochhammer(-c - 3 * n + i + 2, i // 2)
        out /= pochhammer(i, i)
    return out


det_record("chu2", _sample_c, _build_chu2, _closed_chu2, max_n=5)
