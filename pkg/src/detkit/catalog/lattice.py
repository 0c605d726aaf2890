"""Binomial determinants with block-band structure or with rows and
columns indexed by lattice-point pairs; the last two are compared in
absolute value only (their sign is not part of the closed form)."""

from __future__ import annotations

from fractions import Fraction

from ..exactnum import binomial, pochhammer, rat
from ..linalg import MatrixR, det
from .base import IdentityRecord, det_record, rand_frac, register


def _ceil(a: int, b: int) -> int:
    return -((-a) // b)


# ---------------------------------------------------------------------------
# three-band block matrix


def _sample_xbc(rng, n):
    return {"b": n, "c": rng.randint(0, n), "x": rand_frac(rng)}


def _build_xbc(n, b, c, x):
    x = rat(x)

    def entry(i, j):
        if j < c:
            if i < c:
                return binomial(x + j, i)
            if i < b:
                return Fraction(0)
            return 2 * binomial(x + j, i - b)
        if j < b:
            if i < b:
                return binomial(x + j, i)
            return binomial(x + j, i - b)
        if i < b:
            return binomial(2 * x + j, i)
        return Fraction(0)
    return MatrixR.build(b + c, b + c, entry)


def _closed_xbc(n, b, c, x):
    x = rat(x)
    if b % 2 == 0 and c % 2 == 1:
        return Fraction(0)
    half_b = _ceil(b, 2)
    out = Fraction(-1) ** c * Fraction(2) ** c
    for i in range(1, b - c + 1):
        out *= pochhammer(i + Fraction(1, 2) - half_b, c) / pochhammer(i, c)
    for i in range(1, c + 1):
        e1 = b - c + _ceil(i, 2) - _ceil(c + i, 2)
        e2 = _ceil(b + i, 2) - _ceil(b - c + i, 2)
        out *= pochhammer(x + _ceil(c + i, 2), e1)
        out *= pochhammer(x + _ceil(b - c + i, 2), e2)
        out /= pochhammer(Fraction(1, 2) - half_b + _ceil(c + i, 2), e1)
        out /= pochhammer(Fraction(1, 2) - half_b + _ceil(b - c + i, 2), e2)
    return out


det_record("bombieri-xbc", _sample_xbc, _build_xbc, _closed_xbc, max_n=5)


# ---------------------------------------------------------------------------
# lattice-pair indexed matrices, |det| asserted only


_SMALL_PAIRS = ((1, 1), (1, 2), (2, 1), (2, 2))


def _build_poorten(n, N, l, x):
    x = rat(x)
    rows = [(i1, i2) for i2 in range(N) for i1 in range(2 * l * (N - i2))]
    cols = [(j1, j2) for j2 in range(N + 1) for j1 in range(l * N)]
    assert len(rows) == len(cols)

    def entry(r, c):
        i1, i2 = rows[r]
        j1, j2 = cols[c]
        return (Fraction(-1) ** abs(i1 - j1)
                * binomial(-x * (N - j2), i1 - j1) * binomial(j2, i2))
    return MatrixR.build(len(rows), len(rows), entry)


def _closed_poorten(n, N, l, x):
    x = rat(x)
    out = Fraction(1)
    for i in range(1, l + 1):
        out *= binomial(x + i - 1, 2 * i - 1) / binomial(l + i - 1, 2 * i - 1)
    return out ** binomial(N + 2, 3)


def _poorten_trial(rng, n):
    N, l = _SMALL_PAIRS[rng.randrange(len(_SMALL_PAIRS))]
    x = rand_frac(rng)
    params = {"N": N, "l": l, "x": x}
    lhs = abs(det(_build_poorten(n, N, l, x)))
    rhs = abs(_closed_poorten(n, N, l, x))
    return params, lhs, rhs


register(IdentityRecord(id="poorten", trial=_poorten_trial, max_n=2,
                        builder=_build_poorten, closed=_closed_poorten))


def _build_conj(n, N, l):
    rows = [(i1, i2) for i2 in range(N) for i1 in range(2 * l * (N - i2))]
    cols = [(j1, j2) for j2 in range(N + 1)
            for j1 in range(2 * l * (N - j2), l * (3 * N - 2 * j2))]
    assert len(rows) == len(cols)

    def entry(r, c):
        i1, i2 = rows[r]
        j1, j2 = cols[c]
        return binomial(j1, i1) * binomial(j2, i2)
    return MatrixR.build(len(rows), len(rows), entry)


def _closed_conj(n, N, l):
    # the x = -2l specialization of the parametrized evaluation above
    return _closed_poorten(n, N, l, Fraction(-2 * l))


def _conj_trial(rng, n):
    N, l = _SMALL_PAIRS[rng.randrange(len(_SMALL_PAIRS))]
    params = {"N": N, "l": l}
    lhs = abs(det(_build_conj(n, N, l)))
    rhs = abs(_closed_conj(n, N, l))
    return params, lhs, rhs


register(IdentityRecord(id="bombieri-conj", trial=_conj_trial, max_n=2,
                        builder=_build_conj, closed=_closed_conj))
