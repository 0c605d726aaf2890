"""Determinants with factorial-ratio and q-shifted-factorial entries,
the banded binomial-sum family, and the mixed-row variant with one
distinguished row."""

from __future__ import annotations

from fractions import Fraction

from ..exactnum import (binomial, factorial, pochhammer, q_binomial,
                        q_pochhammer, rat)
from ..linalg import MatrixR
from .base import det_record, prod, rand_nonzero, rand_q


def _fact(m: int) -> Fraction:
    return Fraction(factorial(m))


def _dfact(m: int) -> Fraction:
    out = 1
    while m > 0:
        out *= m
        m -= 2
    return Fraction(out)


def _qq(m: int, q) -> Fraction:
    """(q;q)_m for m >= 0."""
    return q_pochhammer(q, q, m)


# ---------------------------------------------------------------------------
# factorial-ratio entries (x+y+i+j-1)!/((x+2i-j)!(y+2j-i)!), 0-based


def _sample_xy_pos(rng, n):
    x = rng.randint(0, 5)
    y = rng.randint(max(0, 1 - x), 5)
    return {"x": x, "y": y}


def _build_kratxy(n, x, y):
    def entry(i, j):
        a, b = x + 2 * i - j, y + 2 * j - i
        if a < 0 or b < 0:
            return Fraction(0)
        return _fact(x + y + i + j - 1) / (_fact(a) * _fact(b))
    return MatrixR.build(n, n, entry)


def _closed_kratxy(n, x, y):
    out = Fraction(1)
    for i in range(n):
        out *= _fact(i) * _fact(x + y + i - 1)
        out *= pochhammer(2 * x + y + 2 * i, i) * pochhammer(x + 2 * y + 2 * i, i)
        out /= _fact(x + 2 * i) * _fact(y + 2 * i)
    return out


det_record("krat-xy", _sample_xy_pos, _build_kratxy, _closed_kratxy, max_n=5)


def _sample_xyq(rng, n):
    return {**_sample_xy_pos(rng, n), "q": rand_q(rng, 7)}


def _build_qkrat(n, x, y, q):
    q = rat(q)

    def entry(i, j):
        a, b = x + 2 * i - j, y + 2 * j - i
        if a < 0 or b < 0:
            return Fraction(0)
        out = _qq(x + y + i + j - 1, q) / (_qq(a, q) * _qq(b, q))
        out *= q ** (-2 * i * j)
        out /= q_pochhammer(-q ** (x + y + 1), q, i + j)
        return out
    return MatrixR.build(n, n, entry)


def _closed_qkrat(n, x, y, q):
    q = rat(q)
    out = Fraction(1)
    for i in range(n):
        out *= q ** (-2 * i * i) * q_pochhammer(q * q, q * q, i)
        out *= _qq(x + y + i - 1, q)
        out *= q_pochhammer(q ** (2 * x + y + 2 * i), q, i)
        out *= q_pochhammer(q ** (x + 2 * y + 2 * i), q, i)
        out /= _qq(x + 2 * i, q) * _qq(y + 2 * i, q)
        out /= q_pochhammer(-q ** (x + y + 1), q, n - 1 + i)
    return out


det_record("qkrat", _sample_xyq, _build_qkrat, _closed_qkrat, max_n=4)


def _sample_anst(rng, n):
    return {"x": rand_nonzero(rng, lo=-5, hi=5, max_den=3),
            "E": rand_nonzero(rng, lo=-5, hi=5, max_den=3),
            "q": rand_q(rng, 7)}


def _build_anst(n, x, E, q):
    x, E, q = rat(x), rat(E), rat(q)
    q2 = q * q

    def entry(i, j):
        k = i - j
        if 2 * i + 1 - j < 0:
            return Fraction(0)
        num = (q_pochhammer(E / (x * q ** i), q2, k)
               * q_pochhammer(q / (E * x * q ** i), q2, k)
               * q_pochhammer(1 / (x * x * q ** (2 + 4 * i)), q2, k))
        den = (_qq(2 * i + 1 - j, q)
               * q_pochhammer(1 / (E * x * q ** (2 * i)), q, k)
               * q_pochhammer(E / (x * q ** (1 + 2 * i)), q, k))
        return num / den
    return MatrixR.build(n, n, entry)


def _closed_anst(n, x, E, q):
    x, E, q = rat(x), rat(E), rat(q)
    q2 = q * q
    out = Fraction(1)
    for i in range(n):
        out *= q_pochhammer(x * x * q ** (2 * i + 1), q, i)
        out *= q_pochhammer(x * q ** (3 + i) / E, q2, i)
        out *= q_pochhammer(E * x * q ** (2 + i), q2, i)
        out /= q_pochhammer(x * x * q ** (2 * i + 2), q2, i)
        out /= q_pochhammer(q, q2, i + 1)
        out /= q_pochhammer(E * x * q ** (1 + i), q, i)
        out /= q_pochhammer(x * q ** (2 + i) / E, q, i)
    return out


det_record("anst", _sample_anst, _build_anst, _closed_anst, max_n=4)


def _build_tsscpp1(n, x, y):
    def entry(i, j):
        a, b = x + 2 * i - j + 1, y + 2 * j - i + 1
        if a < 0 or b < 0:
            return Fraction(0)
        return _fact(x + y + i + j - 1) * (y - x + 3 * j - 3 * i) \
            / (_fact(a) * _fact(b))
    return MatrixR.build(n, n, entry)


def _closed_tsscpp1(n, x, y):
    out = Fraction(1)
    for i in range(n):
        out *= _fact(i) * _fact(x + y + i - 1)
        out *= pochhammer(2 * x + y + 2 * i + 1, i)
        out *= pochhammer(x + 2 * y + 2 * i + 1, i)
        out /= _fact(x + 2 * i + 1) * _fact(y + 2 * i + 1)
    out *= sum((-1) ** k * binomial(n, k) * pochhammer(x, k) * pochhammer(y, n - k)
               for k in range(n + 1))
    return out


det_record("tsscpp1", _sample_xy_pos, _build_tsscpp1, _closed_tsscpp1, max_n=5)


def _build_qtsscpp1(n, x, y, q):
    q = rat(q)

    def entry(i, j):
        a, b = x + 2 * i - j + 1, y + 2 * j - i + 1
        if a < 0 or b < 0:
            return Fraction(0)
        out = _qq(x + y + i + j - 1, q) * (
            1 - q ** (y + 2 * j - i) - q ** (y + 2 * j - i + 1)
            + q ** (x + y + i + j + 1))
        out /= _qq(a, q) * _qq(b, q)
        out *= q ** (-2 * i * j)
        out /= q_pochhammer(-q ** (x + y + 2), q, i + j)
        return out
    return MatrixR.build(n, n, entry)


def _closed_qtsscpp1(n, x, y, q):
    q = rat(q)
    out = Fraction(1)
    for i in range(n):
        out *= q ** (-2 * i * i) * q_pochhammer(q * q, q * q, i)
        out *= _qq(x + y + i - 1, q)
        out *= q_pochhammer(q ** (2 * x + y + 2 * i + 1), q, i)
        out *= q_pochhammer(q ** (x + 2 * y + 2 * i + 1), q, i)
        out /= _qq(x + 2 * i + 1, q) * _qq(y + 2 * i + 1, q)
        out /= q_pochhammer(-q ** (x + y + 2), q, n - 1 + i)
    out *= sum(
        (-1) ** k * q ** (n * k) * q_binomial(n, k, q) * q ** (y * k)
        * q_pochhammer(q ** x, q, k) * q_pochhammer(q ** y, q, n - k)
        for k in range(n + 1))
    return out


det_record("qtsscpp1", _sample_xyq, _build_qtsscpp1, _closed_qtsscpp1, max_n=4)


# ---------------------------------------------------------------------------
# banded binomial sums, 0-based, with the signed empty/reversed convention


def _banded_entry(n, m, x, i, j):
    lo, hi = x + 2 * i - j, x + m + 2 * j - i
    if lo == hi:
        return Fraction(0)
    sign = 1
    if lo > hi:
        lo, hi, sign = hi, lo, -1
    top = 2 * x + m + i + j
    return sign * sum(binomial(top, r) for r in range(lo + 1, hi + 1))


def _sample_x(rng, n):
    return {"x": rng.randint(0, 4)}


def _make_tsscpp2(m, min_n):
    def build(n, x):
        return MatrixR.build(n, n, lambda i, j: _banded_entry(n, m, x, i, j))

    def closed(n, x):
        h = n // 2
        if m == 0 and n % 2:
            return Fraction(0)
        out = Fraction(1)
        for i in range(n):
            out *= _fact(i) * _fact(2 * x + i + m)
            if m == 0:
                out *= pochhammer(3 * x + 2 * i + 2, i) ** 2
                out /= _fact(x + 2 * i) ** 2
            elif m == 1:
                out *= pochhammer(3 * x + 2 * i + 3, i) * pochhammer(3 * x + 2 * i + 4, i)
                out /= _fact(x + 2 * i) * _fact(x + 2 * i + 1)
            elif m == 2:
                out *= pochhammer(3 * x + 2 * i + 4, i) * pochhammer(3 * x + 2 * i + 6, i)
                out /= _fact(x + 2 * i) * _fact(x + 2 * i + 2)
            elif m == 3:
                out *= pochhammer(3 * x + 2 * i + 5, i) * pochhammer(3 * x + 2 * i + 8, i)
                out /= _fact(x + 2 * i) * _fact(x + 2 * i + 3)
            else:
                out *= pochhammer(3 * x + 2 * i + 6, i) * pochhammer(3 * x + 2 * i + 10, i)
                out /= _fact(x + 2 * i) * _fact(x + 2 * i + 4)
        shift = 1 if m == 0 else (3 if m in (1, 2) else 5)
        out *= prod(2 * x + 2 * i + shift for i in range(h))
        out /= _dfact(2 * h - 1)
        if m == 2:
            out *= Fraction(x + n + 1 if n % 2 == 0 else 2 * x + n + 2, x + 1)
        elif m == 3:
            out *= Fraction(x + 2 * n + 1 if n % 2 == 0 else 3 * x + 2 * n + 5, x + 1)
        elif m == 4:
            if n % 2 == 0:
                out *= x * x + (4 * n + 3) * x + 2 * (n * n + 4 * n + 1)
            else:
                out *= (2 * x + n + 4) * (2 * x + 2 * n + 4)
            out /= (x + 1) * (x + 2)
        return out

    det_record(f"tsscpp2-m{m}", _sample_x, build, closed, max_n=5, min_n=min_n)


_make_tsscpp2(0, 1)
_make_tsscpp2(1, 1)
_make_tsscpp2(2, 2)
_make_tsscpp2(3, 3)
_make_tsscpp2(4, 4)


# ---------------------------------------------------------------------------
# pentagonal binomial-difference determinant, 1-based


def _sample_pent(rng, n):
    return {"x": rng.randint(0, 4), "y": rng.randint(0, 4)}


def _build_pentagon(n, x, y):
    return MatrixR.build(
        n, n,
        lambda i0, j0: binomial(x + y + j0 + 1, x - i0 + 2 * j0 + 1)
        - binomial(x + y + j0 + 1, x + i0 + 2 * j0 + 3))


def _closed_pentagon(n, x, y):
    out = Fraction(1)
    for j in range(1, n + 1):
        out *= _fact(j - 1) * _fact(x + y + 2 * j)
        out *= pochhammer(x - y + 2 * j + 1, j)
        out *= pochhammer(x + 2 * y + 3 * j + 1, n - j)
        out /= _fact(x + n + 2 * j) * _fact(y + n - j)
    return out


det_record("pentagon", _sample_pent, _build_pentagon, _closed_pentagon, max_n=5)


# ---------------------------------------------------------------------------
# mixed-row binomial determinant with one plain row, 1-based


def _sample_fukr2(rng, n):
    return {"m": rng.randint(1, 4), "l": rng.randint(1, n)}


def _build_fukr2(n, m, l):
    def entry(i0, j0):
        i, j = i0 + 1, j0 + 1
        k = m + i - j
        if i == l:
            return binomial(n + m - i, k)
        if k < 0:
            return Fraction(0)
        w = m + Fraction(n - j + 1, 2)
        if k == 0:
            return w / (n + j - 2 * i + 1)
        return w * prod(Fraction(n + m - i - t) for t in range(k - 1)) / _fact(k)
    return MatrixR.build(n, n, entry)


def _closed_fukr2(n, m, l):
    out = Fraction(1)
    for i in range(1, n + 1):
        out *= _fact(n + m - i) / (_fact(m + i - 1) * _fact(2 * n - 2 * i + 1))
    for i in range(1, n // 2 + 1):
        out *= pochhammer(m + i, n - 2 * i + 1)
        out *= pochhammer(m + i + Fraction(1, 2), n - 2 * i)
    out *= Fraction(2) ** ((n - 1) * (n - 2) // 2)
    out *= pochhammer(m, n + 1) * prod(_fact(2 * j - 1) for j in range(1, n + 1))
    out /= _fact(n) * prod(pochhammer(2 * i, 2 * n - 4 * i + 1)
                           for i in range(1, n // 2 + 1))
    out *= sum(
        (-1) ** e * binomial(n, e) * (n - 2 * e) * pochhammer(Fraction(1, 2), e)
        / ((m + e) * (m + n - e) * pochhammer(Fraction(1, 2) - n, e))
        for e in range(l))
    return out


det_record("fukr2", _sample_fukr2, _build_fukr2, _closed_fukr2, max_n=5)
