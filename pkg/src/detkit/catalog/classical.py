"""Alternant-style determinant records: power/Laurent-power matrices,
double alternants, the factored-column lemmas, and the boxed plane
partition product formula."""

from __future__ import annotations

from fractions import Fraction

from ..exactnum import PolyQ, binomial, rat
from ..linalg import MatrixR, det, permanent
from .base import (Resample, det_record, distinct_fracs, prod, rand_frac,
                   rand_nonzero)


def _vdm(xs) -> Fraction:
    return prod(xs[j] - xs[i] for i in range(len(xs)) for j in range(i + 1, len(xs)))


# ---------------------------------------------------------------------------
# power matrices


def _sample_x(rng, n):
    return {"X": distinct_fracs(rng, n)}


def _build_vandermonde(n, X):
    return MatrixR.build(n, n, lambda i, j: rat(X[i]) ** j)


def _closed_vandermonde(n, X):
    return _vdm([rat(x) for x in X])


det_record("vandermonde", _sample_x, _build_vandermonde, _closed_vandermonde, max_n=5)


def _sample_vdm_poly(rng, n):
    X = distinct_fracs(rng, n)
    polys = []
    for j in range(n):
        coeffs = [rand_frac(rng) for _ in range(j)] + [rand_nonzero(rng)]
        polys.append(tuple(coeffs))
    return {"X": X, "coeffs": tuple(polys)}


def _build_vdm_poly(n, X, coeffs):
    ps = [PolyQ(c) for c in coeffs]
    return MatrixR.build(n, n, lambda i, j: ps[j](rat(X[i])))


def _closed_vdm_poly(n, X, coeffs):
    leading = prod(rat(c[-1]) for c in coeffs)
    return leading * _vdm([rat(x) for x in X])


det_record("vandermonde-poly", _sample_vdm_poly, _build_vdm_poly, _closed_vdm_poly, max_n=5)


def _sample_x_nonzero(rng, n):
    return {"X": distinct_fracs(rng, n, nonzero=True)}


def _pair_products(X):
    """prod_{i<j} (X_i - X_j)(1 - X_i X_j)."""
    n = len(X)
    return prod((X[i] - X[j]) * (1 - X[i] * X[j])
                for i in range(n) for j in range(i + 1, n))


def _build_weyl_c(n, X):
    return MatrixR.build(n, n, lambda i, j: rat(X[i]) ** (j + 1) - rat(X[i]) ** (-(j + 1)))


def _closed_weyl_c(n, X):
    X = [rat(x) for x in X]
    return (prod(X) ** (-n)) * _pair_products(X) * prod(x**2 - 1 for x in X)


det_record("weyl-c", _sample_x_nonzero, _build_weyl_c, _closed_weyl_c, max_n=5)


def _sample_half_powers(rng, n):
    """Base values t_i > 0 with distinct squares X_i = t_i^2."""
    for _ in range(200):
        t = distinct_fracs(rng, n, nonzero=True, lo=1, hi=9)
        if len({x * x for x in t}) == n:
            return {"t": t}
    raise Resample


def _build_weyl_b(n, t):
    # entry X_i^(j-1/2) - X_i^-(j-1/2) with X_i = t_i^2
    return MatrixR.build(
        n, n, lambda i, j: rat(t[i]) ** (2 * j + 1) - rat(t[i]) ** (-(2 * j + 1)))


def _closed_weyl_b(n, t):
    t = [rat(v) for v in t]
    X = [v * v for v in t]
    return prod(v ** (1 - 2 * n) for v in t) * _pair_products(X) * prod(x - 1 for x in X)


det_record("weyl-b", _sample_half_powers, _build_weyl_b, _closed_weyl_b, max_n=5)


def _build_weyl_d(n, X):
    return MatrixR.build(n, n, lambda i, j: rat(X[i]) ** j + rat(X[i]) ** (-j))


def _closed_weyl_d(n, X):
    X = [rat(x) for x in X]
    return 2 * prod(X) ** (-n + 1) * _pair_products(X)


det_record("weyl-d", _sample_x_nonzero, _build_weyl_d, _closed_weyl_d, max_n=5)


def _build_weyl_b2(n, t):
    return MatrixR.build(
        n, n, lambda i, j: rat(t[i]) ** (2 * j + 1) + rat(t[i]) ** (-(2 * j + 1)))


def _closed_weyl_b2(n, t):
    t = [rat(v) for v in t]
    X = [v * v for v in t]
    return prod(v ** (1 - 2 * n) for v in t) * _pair_products(X) * prod(x + 1 for x in X)


det_record("weyl-b2", _sample_half_powers, _build_weyl_b2, _closed_weyl_b2, max_n=5)


# ---------------------------------------------------------------------------
# double alternants


def _sample_cauchy(rng, n):
    for _ in range(200):
        X = distinct_fracs(rng, n)
        Y = distinct_fracs(rng, n)
        if all(x + y != 0 for x in X for y in Y):
            return {"X": X, "Y": Y}
    raise Resample


def _build_cauchy(n, X, Y):
    return MatrixR.build(n, n, lambda i, j: 1 / (rat(X[i]) + rat(Y[j])))


def _closed_cauchy(n, X, Y):
    X, Y = [rat(x) for x in X], [rat(y) for y in Y]
    return _vdm(X) * _vdm(Y) / prod(x + y for x in X for y in Y)


det_record("cauchy", _sample_cauchy, _build_cauchy, _closed_cauchy, max_n=5)


def _sample_borchardt(rng, n):
    for _ in range(200):
        X = distinct_fracs(rng, n)
        Y = distinct_fracs(rng, n)
        if all(x - y != 0 for x in X for y in Y):
            return {"X": X, "Y": Y}
    raise Resample


def _build_borchardt(n, X, Y):
    return MatrixR.build(n, n, lambda i, j: 1 / (rat(X[i]) - rat(Y[j])) ** 2)


def _closed_borchardt(n, X, Y):
    X, Y = [rat(x) for x in X], [rat(y) for y in Y]
    per = permanent(MatrixR.build(n, n, lambda i, j: 1 / (X[i] - Y[j])))
    pref = _vdm(X) * _vdm(Y) / prod(x - y for x in X for y in Y)
    return (-1) ** (n * (n - 1) // 2) * pref * per


det_record("borchardt", _sample_borchardt, _build_borchardt, _closed_borchardt, max_n=5)


# ---------------------------------------------------------------------------
# factored-column lemmas


def _sample_xa(rng, n):
    return {"X": distinct_fracs(rng, n), "A": distinct_fracs(rng, n - 1),
            "B": distinct_fracs(rng, n - 1)}


def _build_krat1(n, X, A, B):
    # A[s-2] is A_s, B[s-2] is B_s (s = 2..n)
    def entry(i, j):
        x = rat(X[i])
        out = prod(x + rat(A[s - 2]) for s in range(j + 2, n + 1))
        out *= prod(x + rat(B[s - 2]) for s in range(2, j + 2))
        return out
    return MatrixR.build(n, n, entry)


def _closed_krat1(n, X, A, B):
    X = [rat(x) for x in X]
    out = _vdm(list(reversed(X)))  # prod_{i<j} (X_i - X_j)
    out *= prod(rat(B[i - 2]) - rat(A[j - 2])
                for i in range(2, n + 1) for j in range(i, n + 1))
    return out


det_record("krat1", _sample_xa, _build_krat1, _closed_krat1, max_n=5)


def _sample_krat2(rng, n):
    return {"X": distinct_fracs(rng, n, nonzero=True),
            "A": distinct_fracs(rng, n - 1, nonzero=True),
            "C": rand_nonzero(rng)}


def _build_krat2(n, X, A, C):
    C = rat(C)

    def entry(i, j):
        x = rat(X[i])
        return prod((C / x + rat(A[s - 2])) * (x + rat(A[s - 2]))
                    for s in range(j + 2, n + 1))
    return MatrixR.build(n, n, entry)


def _closed_krat2(n, X, A, C):
    X, C = [rat(x) for x in X], rat(C)
    out = prod(rat(A[i - 2]) ** (i - 1) for i in range(2, n + 1))
    out *= prod((X[i] - X[j]) * (1 - C / (X[i] * X[j]))
                for i in range(n) for j in range(i + 1, n))
    return out


det_record("krat2", _sample_krat2, _build_krat2, _closed_krat2, max_n=5)


def _build_krat2a(n, X, A, C):
    C = rat(C)

    def entry(i, j):
        x = rat(X[i])
        return prod((x - rat(A[s - 2]) - C) * (x + rat(A[s - 2]))
                    for s in range(j + 2, n + 1))
    return MatrixR.build(n, n, entry)


def _closed_krat2a(n, X, A, C):
    X, C = [rat(x) for x in X], rat(C)
    return prod((X[j] - X[i]) * (C - X[i] - X[j])
                for i in range(n) for j in range(i + 1, n))


det_record("krat2a", _sample_krat2, _build_krat2a, _closed_krat2a, max_n=5)


def _sample_krat3(rng, n):
    base = _sample_krat2(rng, n)
    # p_j(X) = prod_s (X + B[j][s])(C/X + B[j][s]): degree j, invariant
    # under X -> C/X
    B = tuple(tuple(rand_nonzero(rng) for _ in range(j)) for j in range(n))
    return {**base, "B": B}


def _sym_p(j, x, B, C):
    return prod((x + rat(b)) * (C / x + rat(b)) for b in B[j])


def _build_krat3(n, X, A, C, B):
    C = rat(C)

    def entry(i, j):
        x = rat(X[i])
        out = prod((x + rat(A[s - 2])) * (C / x + rat(A[s - 2]))
                   for s in range(j + 2, n + 1))
        return out * _sym_p(j, x, B, C)
    return MatrixR.build(n, n, entry)


def _closed_krat3(n, X, A, C, B):
    # p_0 is an empty product (constant 1), so the i=1 factor is 1
    C = rat(C)
    out = _closed_krat2(n, X, A, C)
    for i in range(2, n + 1):
        out *= _sym_p(i - 1, -rat(A[i - 2]), B, C)
    return out


det_record("krat3", _sample_krat3, _build_krat3, _closed_krat3, max_n=5)


def _sample_krat3a(rng, n):
    X = distinct_fracs(rng, n)
    A = distinct_fracs(rng, n - 1)
    polys = tuple(tuple(rand_frac(rng) for _ in range(j + 1)) for j in range(n))
    return {"X": X, "A": A, "polys": polys}


def _build_krat3a(n, X, A, polys):
    ps = [PolyQ(c) for c in polys]

    def entry(i, j):
        x = rat(X[i])
        return prod(x + rat(A[s - 2]) for s in range(j + 2, n + 1)) * ps[j](x)
    return MatrixR.build(n, n, entry)


def _closed_krat3a(n, X, A, polys):
    ps = [PolyQ(c) for c in polys]
    X = [rat(x) for x in X]
    # p_0 is constant; the i >= 2 factors are evaluated at -A_i
    out = _vdm(list(reversed(X))) * ps[0].coeff(0)
    for i in range(2, n + 1):
        out *= ps[i - 1](-rat(A[i - 2]))
    return out


det_record("krat3a", _sample_krat3a, _build_krat3a, _closed_krat3a, max_n=5)


def _sample_krat5(rng, n):
    X = distinct_fracs(rng, n)
    A = distinct_fracs(rng, n - 1)
    C = rand_frac(rng)
    # p_j(X) = prod_s (X + B[j][s])(C - X + B[j][s]): degree 2j, invariant
    # under X -> C - X
    B = tuple(tuple(rand_frac(rng) for _ in range(j)) for j in range(n))
    return {"X": X, "A": A, "C": C, "B": B}


def _refl_p(j, x, B, C):
    return prod((x + rat(b)) * (C - x + rat(b)) for b in B[j])


def _build_krat5(n, X, A, C, B):
    C = rat(C)

    def entry(i, j):
        x = rat(X[i])
        out = prod((x + rat(A[s - 2])) * (x - rat(A[s - 2]) - C)
                   for s in range(j + 2, n + 1))
        return out * _refl_p(j, x, B, C)
    return MatrixR.build(n, n, entry)


def _closed_krat5(n, X, A, C, B):
    X, C = [rat(x) for x in X], rat(C)
    out = prod((X[j] - X[i]) * (C - X[i] - X[j])
               for i in range(n) for j in range(i + 1, n))
    for i in range(2, n + 1):
        out *= _refl_p(i - 1, -rat(A[i - 2]), B, C)
    return out


det_record("krat5", _sample_krat5, _build_krat5, _closed_krat5, max_n=5)


def _sample_krat6(rng, n):
    if n < 2:
        raise Resample
    return {"X": distinct_fracs(rng, n, nonzero=True),
            "A": distinct_fracs(rng, n - 1, nonzero=True),
            "B": distinct_fracs(rng, n - 1, nonzero=True),
            "a": distinct_fracs(rng, n - 1, nonzero=True),
            "b": distinct_fracs(rng, n - 1, nonzero=True),
            "C": rand_nonzero(rng),
            "m": rng.randint(2, n)}


def _build_krat6(n, X, A, B, a, b, C, m):
    C = rat(C)

    def entry(i, j):
        x = rat(X[i])
        col = j + 1  # 1-based column
        if col < m:
            up, lo = A, B
        else:
            up, lo = a, b
        out = prod((x + rat(up[s - 2])) * (C / x + rat(up[s - 2]))
                   for s in range(col + 1, n + 1))
        out *= prod((x + rat(lo[s - 2])) * (C / x + rat(lo[s - 2]))
                    for s in range(2, col + 1))
        return out
    return MatrixR.build(n, n, entry)


def _closed_krat6(n, X, A, B, a, b, C, m):
    X, C = [rat(x) for x in X], rat(C)
    Av = {s: rat(A[s - 2]) for s in range(2, n + 1)}
    Bv = {s: rat(B[s - 2]) for s in range(2, n + 1)}
    av = {s: rat(a[s - 2]) for s in range(2, n + 1)}
    bv = {s: rat(b[s - 2]) for s in range(2, n + 1)}
    out = prod((X[i] - X[j]) * (1 - C / (X[i] * X[j]))
               for i in range(n) for j in range(i + 1, n))
    out *= prod((Bv[i] - Av[j]) * (1 - C / (Bv[i] * Av[j]))
                for i in range(2, m) for j in range(i, m))
    out *= prod((bv[i] - Av[j]) * (1 - C / (bv[i] * Av[j]))
                for i in range(2, m + 1) for j in range(m, n + 1))
    out *= prod((bv[i] - av[j]) * (1 - C / (bv[i] * av[j]))
                for i in range(m + 1, n + 1) for j in range(i, n + 1))
    out *= prod(prod(Av[s] for s in range(i, n + 1)) for i in range(2, m + 1))
    out *= prod(prod(av[s] for s in range(i, n + 1)) for i in range(m + 1, n + 1))
    out *= prod(prod(Bv[s] for s in range(2, i + 1)) for i in range(2, m))
    out *= prod(prod(bv[s] for s in range(2, i + 1)) for i in range(m, n + 1))
    return out


det_record("krat6", _sample_krat6, _build_krat6, _closed_krat6, max_n=5, min_n=2)


def _sample_krat7(rng, n):
    if n < 2:
        raise Resample
    return {"X": distinct_fracs(rng, n),
            "A": distinct_fracs(rng, n - 1),
            "B": distinct_fracs(rng, n - 1),
            "a": distinct_fracs(rng, n - 1),
            "b": distinct_fracs(rng, n - 1),
            "C": rand_frac(rng),
            "m": rng.randint(2, n)}


def _build_krat7(n, X, A, B, a, b, C, m):
    C = rat(C)

    def entry(i, j):
        x = rat(X[i])
        col = j + 1
        if col < m:
            up, lo = A, B
        else:
            up, lo = a, b
        out = prod((x + rat(up[s - 2])) * (x - rat(up[s - 2]) - C)
                   for s in range(col + 1, n + 1))
        out *= prod((x + rat(lo[s - 2])) * (x - rat(lo[s - 2]) - C)
                    for s in range(2, col + 1))
        return out
    return MatrixR.build(n, n, entry)


def _closed_krat7(n, X, A, B, a, b, C, m):
    X, C = [rat(x) for x in X], rat(C)
    Av = {s: rat(A[s - 2]) for s in range(2, n + 1)}
    Bv = {s: rat(B[s - 2]) for s in range(2, n + 1)}
    av = {s: rat(a[s - 2]) for s in range(2, n + 1)}
    bv = {s: rat(b[s - 2]) for s in range(2, n + 1)}
    out = prod((X[i] - X[j]) * (C - X[i] - X[j])
               for i in range(n) for j in range(i + 1, n))
    out *= prod((Bv[i] - Av[j]) * (Bv[i] + Av[j] + C)
                for i in range(2, m) for j in range(i, m))
    out *= prod((bv[i] - Av[j]) * (bv[i] + Av[j] + C)
                for i in range(2, m + 1) for j in range(m, n + 1))
    out *= prod((bv[i] - av[j]) * (bv[i] + av[j] + C)
                for i in range(m + 1, n + 1) for j in range(i, n + 1))
    return out


det_record("krat7", _sample_krat7, _build_krat7, _closed_krat7, max_n=5, min_n=2)


# ---------------------------------------------------------------------------
# boxed plane partitions


def _sample_macmahon(rng, n):
    return {"a": rng.randint(0, 5), "b": rng.randint(0, 5)}


def build_macmahon(n, a, b):
    """n x n matrix with entry binom(a+b, a-i+j), 1-based i, j."""
    return MatrixR.build(
        n, n, lambda i, j: binomial(a + b, a - (i + 1) + (j + 1)))


def macmahon_product(n, a, b):
    """The triple product over an n x a x b box."""
    out = Fraction(1)
    for i in range(1, n + 1):
        for j in range(1, a + 1):
            for k in range(1, b + 1):
                out *= Fraction(i + j + k - 1, i + j + k - 2)
    return out


det_record("macmahon", _sample_macmahon, build_macmahon, macmahon_product, max_n=5)


