"""Block-column generalizations of the power-matrix determinant:
derivative columns, Euler-operator columns, discrete Wronskians via
divided differences, and their q-analogues."""

from __future__ import annotations

from fractions import Fraction

from ..exactnum import (PolyQ, divided_differences, factorial, q_factorial,
                        q_int, rat)
from ..linalg import MatrixR, det
from .base import (Resample, det_record, distinct_fracs, prod, rand_frac,
                   rand_q)


def _binom2(m: int) -> int:
    return m * (m - 1) // 2


def _binom3(m: int) -> int:
    return m * (m - 1) * (m - 2) // 6


def _rand_composition(rng, n: int) -> tuple[int, ...]:
    parts = []
    rem = n
    while rem:
        p = rng.randint(1, rem)
        parts.append(p)
        rem -= p
    return tuple(parts)


def _columns(parts):
    """(block index, within-block 1-based column) in matrix order."""
    out = []
    for k, m in enumerate(parts):
        out.extend((k, s) for s in range(1, m + 1))
    return out


# ---------------------------------------------------------------------------
# derivative columns


def _sample_flha1(rng, n):
    parts = _rand_composition(rng, n)
    return {"parts": parts, "X": distinct_fracs(rng, len(parts))}


def _build_flha1(n, parts, X):
    cols = _columns(parts)

    def entry(i, jc):
        k, s = cols[jc]
        if i < s - 1:
            return Fraction(0)
        coeff = prod(Fraction(i - t) for t in range(s - 1))
        return coeff * rat(X[k]) ** (i - s + 1)
    return MatrixR.build(n, n, entry)


def _closed_flha1(n, parts, X):
    X = [rat(x) for x in X]
    out = prod(Fraction(factorial(j)) for m in parts for j in range(1, m))
    out *= prod((X[j] - X[i]) ** (parts[i] * parts[j])
                for i in range(len(parts)) for j in range(i + 1, len(parts)))
    return out


det_record("flha1", _sample_flha1, _build_flha1, _closed_flha1, max_n=5)


# ---------------------------------------------------------------------------
# Euler-operator columns


def _sample_flha2(rng, n):
    parts = _rand_composition(rng, n)
    return {"parts": parts, "X": distinct_fracs(rng, len(parts), nonzero=True)}


def _build_flha2(n, parts, X):
    cols = _columns(parts)

    def entry(i, jc):
        k, s = cols[jc]
        coeff = Fraction(1) if s == 1 else Fraction(i) ** (s - 1)
        return coeff * rat(X[k]) ** i
    return MatrixR.build(n, n, entry)


def _closed_flha2(n, parts, X):
    X = [rat(x) for x in X]
    out = _closed_flha1(n, parts, X)
    out *= prod(X[k] ** _binom2(parts[k]) for k in range(len(parts)))
    return out


det_record("flha2", _sample_flha2, _build_flha2, _closed_flha2, max_n=5)


# ---------------------------------------------------------------------------
# discrete Wronskians


def _sample_wronski(rng, n):
    parts = _rand_composition(rng, n)
    a = distinct_fracs(rng, n)
    polys = tuple(tuple(rand_frac(rng) for _ in range(n)) for _ in range(n))
    return {"parts": parts, "a": a, "polys": polys}


def _build_wronski(n, parts, a, polys):
    fs = [PolyQ(c) for c in polys]
    # per block, the Newton divided-difference coefficients over the
    # block's point prefix
    tables = []
    off = 0
    for m in parts:
        pts = [rat(x) for x in a[off:off + m]]
        tables.append([divided_differences(f, pts) for f in fs])
        off += m
    cols = _columns(parts)

    def entry(i, jc):
        k, s = cols[jc]
        return tables[k][i][s - 1]
    return MatrixR.build(n, n, entry)


def _closed_wronski(n, parts, a, polys):
    fs = [PolyQ(c) for c in polys]
    pts = [rat(x) for x in a]
    plain = det(MatrixR.build(n, n, lambda i, j: fs[i](pts[j])), "bareiss")
    denom = Fraction(1)
    off = 0
    for m in parts:
        block = pts[off:off + m]
        denom *= prod(block[j] - block[i]
                      for i in range(m) for j in range(i + 1, m))
        off += m
    return plain / denom


det_record("wronski", _sample_wronski, _build_wronski, _closed_wronski, max_n=5)


# ---------------------------------------------------------------------------
# q-analogues


def _sample_qflha1(rng, n):
    parts = _rand_composition(rng, n)
    return {"parts": parts, "X": distinct_fracs(rng, len(parts), nonzero=True),
            "C": rng.randint(0, 4), "q": rand_q(rng)}


def _build_qflha1(n, parts, X, C, q):
    q = rat(q)
    cols = _columns(parts)

    def entry(i, jc):
        k, s = cols[jc]
        coeff = prod(q_int(C + i - t + 1, q) for t in range(1, s))
        return coeff * rat(X[k]) ** (i + 1 - s)
    return MatrixR.build(n, n, entry)


def _cross_q(parts, X, q):
    ell = len(parts)
    return prod(q ** (t - s) * X[j] - X[i]
                for i in range(ell) for j in range(i + 1, ell)
                for s in range(parts[i]) for t in range(parts[j]))


def _n_exponent(parts, C, with_cubes: bool) -> int:
    ell = len(parts)
    out = 0
    before = 0
    for i in range(ell):
        m = parts[i]
        for j in range(1, m + 1):
            out += (C + j + before - 1) * (m - j)
        if with_cubes:
            out -= _binom3(m)
        before += m
    for i in range(ell):
        for j in range(i + 1, ell):
            out -= parts[i] * _binom2(parts[j]) - parts[j] * _binom2(parts[i])
    return out


def _closed_qflha1(n, parts, X, C, q):
    q = rat(q)
    X = [rat(x) for x in X]
    out = q ** _n_exponent(parts, C, with_cubes=True)
    out *= prod(q_factorial(j, q) for m in parts for j in range(1, m))
    return out * _cross_q(parts, X, q)


det_record("qflha1", _sample_qflha1, _build_qflha1, _closed_qflha1, max_n=5)


def _build_qflha2(n, parts, X, C, q):
    q = rat(q)
    cols = _columns(parts)

    def entry(i, jc):
        k, s = cols[jc]
        coeff = Fraction(1) if s == 1 else q_int(C + i, q) ** (s - 1)
        return coeff * rat(X[k]) ** i
    return MatrixR.build(n, n, entry)


def _closed_qflha2(n, parts, X, C, q):
    q = rat(q)
    X = [rat(x) for x in X]
    out = q ** _n_exponent(parts, C, with_cubes=False)
    out *= prod(X[k] ** _binom2(parts[k]) for k in range(len(parts)))
    out *= prod(q_factorial(j, q) for m in parts for j in range(1, m))
    return out * _cross_q(parts, X, q)


det_record("qflha2", _sample_qflha1, _build_qflha2, _closed_qflha2, max_n=5)
