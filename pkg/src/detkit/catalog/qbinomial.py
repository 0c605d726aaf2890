"""Determinants with binomial and q-binomial entries indexed by a
strictly decreasing (or increasing) integer sequence L, plus the
perturbed-identity family det(±I + binomial matrix)."""

from __future__ import annotations

from fractions import Fraction

from ..exactnum import (binomial, factorial, pochhammer, q_binomial,
                        q_factorial, q_int, q_pochhammer, rat)
from ..linalg import MatrixR
from .base import (Resample, decreasing_ints, det_record, prod, rand_frac,
                   rand_q)


def _qf(m: int, q) -> Fraction:
    """[m]_q!, defined only for m >= 0 (out-of-domain resamples)."""
    if m < 0:
        raise Resample
    return q_factorial(m, q)


def _fact(m: int) -> Fraction:
    if m < 0:
        raise Resample
    return Fraction(factorial(m))


def _inv_fact(m: int) -> Fraction:
    """1/m!, with 1/(negative)! = 0."""
    return Fraction(0) if m < 0 else Fraction(1, factorial(m))


def _dfact(m: int) -> Fraction:
    """Double factorial m!! (empty product for m <= 0)."""
    out = 1
    while m > 0:
        out *= m
        m -= 2
    return Fraction(out)


def _increasing_ints(rng, n: int, hi: int) -> tuple[int, ...]:
    return tuple(sorted(rng.sample(range(0, hi + 1), n)))


# ---------------------------------------------------------------------------
# q-binomial columns shifted by j


def _sample_pp1(rng, n):
    return {"L": decreasing_ints(rng, n, hi=7), "A": rng.randint(n, n + 4),
            "q": rand_q(rng, 7)}


def _build_pp1(n, L, A, q):
    q = rat(q)
    return MatrixR.build(
        n, n, lambda i, j: q_binomial(L[i] + A + j + 1, L[i] + j + 1, q))


def _closed_pp1(n, L, A, q):
    q = rat(q)
    out = q ** sum(i * (L[i] + i + 1) for i in range(n))
    out *= prod(q_int(L[i] - L[j], q)
                for i in range(n) for j in range(i + 1, n))
    for i in range(n):
        out *= _qf(L[i] + A + 1, q) / (_qf(L[i] + n, q) * _qf(A - i, q))
    return out


det_record("pp1", _sample_pp1, _build_pp1, _closed_pp1, max_n=5)


def _sample_pp2(rng, n):
    L = decreasing_ints(rng, n, hi=6)
    return {"L": L, "A": rng.randint(L[0] + 2, L[0] + 6), "q": rand_q(rng, 7)}


def _build_pp2(n, L, A, q):
    q = rat(q)
    return MatrixR.build(
        n, n,
        lambda i, j: q ** ((j + 1) * L[i]) * q_binomial(A, L[i] + j + 1, q))


def _closed_pp2(n, L, A, q):
    q = rat(q)
    out = q ** sum((i + 1) * L[i] for i in range(n))
    out *= prod(q_int(L[i] - L[j], q)
                for i in range(n) for j in range(i + 1, n))
    for i in range(n):
        out *= _qf(A + i, q) / (_qf(L[i] + n, q) * _qf(A - L[i] - 1, q))
    return out


det_record("pp2", _sample_pp2, _build_pp2, _closed_pp2, max_n=5)


def _sample_pp3(rng, n):
    return {"L": decreasing_ints(rng, n, hi=7),
            "A": rand_frac(rng), "B": rand_frac(rng)}


def _build_pp3(n, L, A, B):
    A, B = rat(A), rat(B)
    return MatrixR.build(
        n, n, lambda i, j: binomial(B * L[i] + A, L[i] + j + 1))


def _closed_pp3(n, L, A, B):
    A, B = rat(A), rat(B)
    out = prod(Fraction(L[i] - L[j])
               for i in range(n) for j in range(i + 1, n))
    for i in range(n):
        out *= pochhammer((B - 1) * L[i] + A, L[i] + 1) / _fact(L[i] + n)
        out *= pochhammer(A - B * (i + 1) + 1, i)
    return out


det_record("pp3", _sample_pp3, _build_pp3, _closed_pp3, max_n=5)


def _sample_abel(rng, n):
    return {"L": tuple(sorted(rng.sample(range(0, n + 1), n), reverse=True)),
            "A": rand_frac(rng), "B": rand_frac(rng)}


def _build_abel(n, L, A, B):
    A, B = rat(A), rat(B)
    return MatrixR.build(
        n, n,
        lambda i, j: (A + B * L[i]) ** j * _inv_fact(j + 1 - L[i]))


def _closed_abel(n, L, A, B):
    A, B = rat(A), rat(B)
    out = prod(Fraction(L[j] - L[i])
               for i in range(n) for j in range(i + 1, n))
    for i in range(n):
        out *= (A + B * (i + 1)) ** i * _inv_fact(n - L[i])
    return out


det_record("abel", _sample_abel, _build_abel, _closed_abel, max_n=5)


def _sample_shifted(rng, n):
    return {"L": decreasing_ints(rng, n, hi=6),
            "A": rng.randint(2 * n, 2 * n + 4), "q": rand_q(rng, 7)}


def _build_shifted(n, L, A, q):
    q = rat(q)
    return MatrixR.build(
        n, n,
        lambda i, j: q ** ((j + 1) * L[i])
        * q_binomial(L[i] + A - j - 1, L[i] + j + 1, q))


def _closed_shifted(n, L, A, q):
    q = rat(q)
    out = q ** sum((i + 1) * L[i] for i in range(n))
    for i in range(n):
        out *= _qf(L[i] + A - n, q) / (_qf(L[i] + n, q) * _qf(A - 2 * (i + 1), q))
    out *= prod(q_int(L[i] - L[j], q) * q_int(L[i] + L[j] + A + 1, q)
                for i in range(n) for j in range(i + 1, n))
    return out


det_record("shifted", _sample_shifted, _build_shifted, _closed_shifted, max_n=5)


# ---------------------------------------------------------------------------
# products and ratios of two q-binomials


def _sample_pp5(rng, n):
    B = rng.randint(max(1, n - 1), n + 2)
    lo = max(0, B - n)
    L = tuple(sorted(rng.sample(range(lo, lo + n + 5), n), reverse=True))
    return {"L": L, "A": rng.randint(2 * n + 1, 2 * n + 5), "B": B,
            "q": rand_q(rng, 7)}


def _build_pp5(n, L, A, B, q):
    q = rat(q)
    return MatrixR.build(
        n, n,
        lambda i, j: q_binomial(L[i] + j + 1, B, q)
        * q_binomial(L[i] + A - j - 1, B, q))


def _closed_pp5(n, L, A, B, q):
    q = rat(q)
    c3 = (n + 1) * n * (n - 1) // 6
    out = q ** (sum(i * L[i] for i in range(n)) - B * (n * (n - 1) // 2) + 2 * c3)
    out *= prod(q_int(L[i] - L[j], q) * q_int(L[i] + L[j] + A - B + 1, q)
                for i in range(n) for j in range(i + 1, n))
    for i0 in range(n):
        i = i0 + 1
        out *= _qf(L[i0] + 1, q) * _qf(L[i0] + A - n, q) \
            / (_qf(L[i0] - B + n, q) * _qf(L[i0] + A - B - 1, q))
        out *= _qf(A - 2 * i - 1, q) \
            / (_qf(A - i - n - 1, q) * _qf(B + i - n, q) * _qf(B, q))
    return out


det_record("pp5", _sample_pp5, _build_pp5, _closed_pp5, max_n=5)


def _sample_pp5a(rng, n):
    X = tuple(sorted(rng.sample(range(0, 7), n), reverse=True))
    B = rng.randint(n - 1, n + 3) if n > 1 else rng.randint(1, 4)
    A = rng.randint(max(0, X[0] - B + n - 1), X[0] - B + n + 4)
    Y = tuple(rng.randint(0, 6) for _ in range(n))
    return {"X": X, "Y": Y, "A": A, "B": B, "q": rand_q(rng, 7)}


def _build_pp5a(n, X, Y, A, B, q):
    q = rat(q)

    def entry(i, j):
        den = q_binomial(X[i] + B, j, q) * q_binomial(A + B - X[i], j, q)
        num = q_binomial(X[i] + Y[j], j, q) * q_binomial(Y[j] + A - X[i], j, q)
        return num / den
    return MatrixR.build(n, n, entry)


def _closed_pp5a(n, X, Y, A, B, q):
    q = rat(q)
    c3 = n * (n - 1) * (n - 2) // 6
    out = q ** (2 * c3 + sum(i * (X[i] + Y[i] - A - 2 * B) for i in range(n)))
    # here the bracket factors are unnormalized: 1 - q^m, not [m]_q
    out *= prod((1 - q ** (X[i] - X[j])) * (1 - q ** (X[i] + X[j] - A))
                for i in range(n) for j in range(i + 1, n))
    for i in range(n):
        out *= q_pochhammer(q ** (B - Y[i] - i + 1), q, i)
        out *= q_pochhammer(q ** (Y[i] + A + B + 2 - 2 * i), q, i)
        out /= q_pochhammer(q ** (X[i] - A - B), q, n - 1)
        out /= q_pochhammer(q ** (X[i] + B - n + 2), q, n - 1)
    return out


det_record("pp5a", _sample_pp5a, _build_pp5a, _closed_pp5a, max_n=4)


# ---------------------------------------------------------------------------
# differences/sums of two q-binomials (reflection-symmetric index sets)


def _sample_incr(rng, n):
    return {"L": _increasing_ints(rng, n, hi=n),
            "A": rng.randint(2, 6), "q": rand_q(rng, 7)}


def _build_pp4(n, L, A, q):
    q = rat(q)

    def entry(i0, j0):
        j = j0 + 1
        return q ** (j * (L[j0] - L[i0])) * (
            q_binomial(A, j - L[i0], q)
            - q ** (j * (2 * L[i0] + A - 1)) * q_binomial(A, -j - L[i0] + 1, q))
    return MatrixR.build(n, n, entry)


def _closed_pp4(n, L, A, q):
    q = rat(q)
    out = Fraction(1)
    for i0 in range(n):
        out *= _qf(A + 2 * (i0 + 1) - 2, q) \
            / (_qf(n - L[i0], q) * _qf(A + n - 1 + L[i0], q))
    out *= prod(q_int(L[j] - L[i], q)
                for i in range(n) for j in range(i + 1, n))
    out *= prod(q_int(L[i] + L[j] + A - 1, q)
                for i in range(n) for j in range(i, n))
    return out


det_record("pp4", _sample_incr, _build_pp4, _closed_pp4, max_n=5)


def _build_pp4a(n, L, A, q):
    q = rat(q)

    def entry(i0, j0):
        j = j0 + 1
        return q ** (j * (L[j0] - L[i0])) * (
            q_binomial(A, j - L[i0], q)
            - q ** (j * (2 * L[i0] + A)) * q_binomial(A, -j - L[i0], q))
    return MatrixR.build(n, n, entry)


def _closed_pp4a(n, L, A, q):
    q = rat(q)
    out = Fraction(1)
    for i0 in range(n):
        out *= _qf(A + 2 * (i0 + 1) - 1, q) \
            / (_qf(n - L[i0], q) * _qf(A + n + L[i0], q))
    out *= prod(q_int(L[j] - L[i], q)
                for i in range(n) for j in range(i + 1, n))
    out *= prod(q_int(L[i] + L[j] + A, q)
                for i in range(n) for j in range(i, n))
    return out


det_record("pp4a", _sample_incr, _build_pp4a, _closed_pp4a, max_n=5)


def _sample_pp6(rng, n):
    return {"L": _increasing_ints(rng, n, hi=n),
            "A": 2 * rng.randint(1, 4), "r": rand_q(rng, 5)}


def _build_pp6(n, L, A, r):
    r = rat(r)
    q = r * r

    def entry(i0, j0):
        j = j0 + 1
        return r ** ((2 * j - 1) * (L[j0] - L[i0])) * (
            q_binomial(A, j - L[i0], q)
            + r ** ((2 * j - 1) * (2 * L[i0] + A - 1))
            * q_binomial(A, -j - L[i0] + 1, q))
    return MatrixR.build(n, n, entry)


def _closed_pp6(n, L, A, r):
    r = rat(r)
    q = r * r
    out = Fraction(1)
    for i0 in range(n):
        i = i0 + 1
        out *= (1 + r ** (2 * L[i0] + A - 1)) / (1 + r ** (2 * i + A - 1))
        out *= _qf(A + 2 * i - 1, q) \
            / (_qf(n - L[i0], q) * _qf(A + n + L[i0] - 1, q))
    out *= prod(q_int(L[j] - L[i], q) * q_int(L[i] + L[j] + A - 1, q)
                for i in range(n) for j in range(i + 1, n))
    return out


det_record("pp6", _sample_pp6, _build_pp6, _closed_pp6, max_n=5)


def _build_pp6a(n, L, A, r):
    r = rat(r)
    q = r * r

    def entry(i0, j0):
        j = j0 + 1
        return r ** ((2 * j - 1) * (L[j0] - L[i0])) * (
            q_binomial(A, j - L[i0], q)
            + r ** ((2 * j - 1) * (2 * L[i0] + A - 2))
            * q_binomial(A, -j - L[i0] + 2, q))
    return MatrixR.build(n, n, entry)


def _closed_pp6a(n, L, A, r):
    r = rat(r)
    q = r * r
    out = Fraction(1)
    for i0 in range(n):
        i = i0 + 1
        out *= 1 + r ** (2 * L[i0] + A - 2)
        if i >= 2:
            out /= 1 + r ** (2 * i + A - 2)
        out *= _qf(A + 2 * i - 2, q) \
            / (_qf(n - L[i0], q) * _qf(A + n + L[i0] - 2, q))
    out *= prod(q_int(L[j] - L[i], q) * q_int(L[i] + L[j] + A - 2, q)
                for i in range(n) for j in range(i + 1, n))
    return out


det_record("pp6a", _sample_pp6, _build_pp6a, _closed_pp6a, max_n=5)


# ---------------------------------------------------------------------------
# perturbed identity plus binomial matrix


def _sample_mu(rng, n):
    return {"mu": rand_frac(rng)}


def _build_andrews(n, mu):
    mu = rat(mu)
    return MatrixR.build(
        n, n,
        lambda i, j: (1 if i == j else 0) + binomial(2 * mu + i + j, j))


def _ceil(a: int, b: int) -> int:
    return -((-a) // b)


def _closed_andrews(n, mu):
    mu = rat(mu)
    out = Fraction(2) ** _ceil(n, 2)
    if n % 2 == 0:
        for i in range(1, n - 1):
            out *= pochhammer(mu + _ceil(i, 2) + 1, (i + 3) // 4)
        for i in range(1, n // 2 + 1):
            base = mu + Fraction(3 * n, 2) - _ceil(3 * i, 2) + Fraction(3, 2)
            out *= pochhammer(base, _ceil(i, 2) - 1) * pochhammer(base, _ceil(i, 2))
        for i in range(1, n // 2):
            out /= _dfact(2 * i - 1) * _dfact(2 * i + 1)
    else:
        for i in range(1, n - 1):
            out *= pochhammer(mu + _ceil(i, 2) + 1, (i + 3) // 4)
        for i in range(1, (n - 1) // 2 + 1):
            out *= pochhammer(
                mu + Fraction(3 * n, 2) - _ceil(3 * i - 1, 2) + 1, _ceil(i - 1, 2))
            out *= pochhammer(
                mu + Fraction(3 * n, 2) - _ceil(3 * i, 2), _ceil(i, 2))
        for i in range(1, (n - 1) // 2 + 1):
            out /= _dfact(2 * i - 1) ** 2
    return out


det_record("andrews", _sample_mu, _build_andrews, _closed_andrews, max_n=5)


def _sample_q_only(rng, n):
    return {"q": rand_q(rng, 7)}


def _build_csp(n, q):
    q = rat(q)
    q3 = q ** 3
    return MatrixR.build(
        n, n,
        lambda i, j: (1 if i == j else 0)
        + q ** (3 * i + 1) * q_binomial(i + j, j, q3))


def _closed_csp(n, q):
    q = rat(q)
    out = prod((1 - q ** (3 * i - 1)) / (1 - q ** (3 * i - 2))
               for i in range(1, n + 1))
    out *= prod((1 - q ** (3 * (n + i + j - 1))) / (1 - q ** (3 * (2 * i + j - 1)))
                for i in range(1, n + 1) for j in range(i, n + 1))
    return out


det_record("csp", _sample_q_only, _build_csp, _closed_csp, max_n=5)


def _build_descpp(n, q):
    q = rat(q)
    return MatrixR.build(
        n, n,
        lambda i, j: (1 if i == j else 0)
        + q ** (i + 2) * q_binomial(i + j + 2, j, q))


def _closed_descpp(n, q):
    q = rat(q)
    return prod((1 - q ** (n + i + j)) / (1 - q ** (2 * i + j - 1))
                for i in range(1, n + 2) for j in range(i, n + 2))


det_record("descpp", _sample_q_only, _build_descpp, _closed_descpp, max_n=5)


def _sample_zare(rng, n):
    return {"mu": rng.randint(0, 6)}


def _build_zare1(n, mu):
    return MatrixR.build(
        n, n,
        lambda i, j: (-1 if i == j else 0) + binomial(2 * mu + i + j, j))


def _closed_zare1(n, mu):
    if n % 2:
        return Fraction(0)
    out = Fraction(-1) ** (n // 2)
    for i in range(n // 2):
        out *= Fraction(
            factorial(i) ** 2 * factorial(mu + i) ** 2
            * factorial(mu + 3 * i + 1) ** 2 * factorial(2 * mu + 3 * i + 1) ** 2,
            factorial(2 * i) * factorial(2 * i + 1)
            * factorial(mu + 2 * i) ** 2 * factorial(mu + 2 * i + 1) ** 2
            * factorial(2 * mu + 2 * i) * factorial(2 * mu + 2 * i + 1))
    return out


det_record("zare1", _sample_zare, _build_zare1, _closed_zare1, max_n=5)
