"""Determinants indexed by combinatorial objects (permutations, set
partitions, noncrossing matchings, alternating sign matrices), the
minor-product identity for column brackets, and two formal-series
determinant lemmas.  Each family also gets a standalone verify_* entry
point returning a VerifyReport."""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction

from ..combinat import (SetPartition, PosetData, all_perms, asm_enumerate,
                        components, enumerate_partitions, nc_lattice,
                        nc_matchings, partition_join, partition_lattice,
                        partition_meet, perm_compose, perm_invert, perm_stat,
                        poset_char_poly, reciprocal_poly)
from ..exactnum import (PolyQ, TruncSeries, binomial, chebyshev_u,
                        q_binomial, q_pochhammer, rat, stirling2)
from ..linalg import MatrixR, char_poly, det
from .base import (IdentityRecord, Resample, Trial, VerifyReport,
                   distinct_fracs, rand_frac, rand_nonzero, rand_q, register,
                   trial_rng)


def _fact(m: int) -> int:
    return math.factorial(m)


def _int_exp(e) -> int:
    e = Fraction(e)
    if e.denominator != 1:
        raise ValueError(f"non-integer exponent {e}")
    return e.numerator


def _int_partitions(n: int, max_part: int = None):
    """All partitions of n as descending tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _int_partitions(n - first, first):
            yield (first,) + rest


def _z_mu(mu) -> int:
    out = 1
    for part, mult in Counter(mu).items():
        out *= part ** mult * _fact(mult)
    return out


def _bell(k: int) -> int:
    return _int_exp(sum(stirling2(k, i) for i in range(k + 1)))


# ---------------------------------------------------------------------------
# group determinants on the symmetric group


def _perm_det_matrix(n: int, q: Fraction, kind: str) -> MatrixR:
    perms = all_perms(n)
    q = rat(q)

    def entry(i, j):
        return q ** perm_stat(perm_compose(perms[i], perm_invert(perms[j])),
                              kind)
    return MatrixR.build(len(perms), len(perms), entry)


def _closed_inv(n: int, q: Fraction) -> Fraction:
    q = rat(q)
    out = Fraction(1)
    for i in range(2, n + 1):
        e = int(binomial(n, i)) * _fact(i - 2) * _fact(n - i + 1)
        out *= (1 - q ** (i * (i - 1))) ** e
    return out


def _closed_maj(n: int, q: Fraction) -> Fraction:
    q = rat(q)
    out = Fraction(1)
    for i in range(2, n + 1):
        out *= (1 - q ** i) ** (_fact(n) * (i - 1) // i)
    return out


def _zagier_inv_trial(rng, n):
    q = rand_q(rng)
    return {"q": q}, det(_perm_det_matrix(n, q, "inv")), _closed_inv(n, q)


def _zagier_maj_trial(rng, n):
    q = rand_q(rng)
    return {"q": q}, det(_perm_det_matrix(n, q, "maj")), _closed_maj(n, q)


register(IdentityRecord(id="zagier-inv", trial=_zagier_inv_trial, max_n=4))
register(IdentityRecord(id="zagier-maj", trial=_zagier_maj_trial, max_n=4))


def _maj_spectrum(n: int, q: Fraction) -> PolyQ:
    """prod over partitions mu of n of (lambda - e_mu)^(n!/z_mu) with
    e_mu = (q;q)_n / prod(1 - q^mu_i)."""
    q = rat(q)
    out = PolyQ.constant(1)
    for mu in _int_partitions(n):
        e_mu = q_pochhammer(q, q, n)
        for part in mu:
            e_mu /= 1 - q ** part
        factor = PolyQ([-e_mu, 1])
        for _ in range(_fact(n) // _z_mu(mu)):
            out = out * factor
    return out


def verify_group_determinant(kind: str, n: int, q, with_spectrum: bool = False) -> VerifyReport:
    """Check the symmetric-group determinant for the chosen statistic at
    one rational q; optionally also the full eigenvalue structure of the
    major-index matrix."""
    if kind not in ("inv", "maj"):
        raise ValueError("kind must be 'inv' or 'maj'")
    q = rat(q)
    m = _perm_det_matrix(n, q, kind)
    closed = _closed_inv(n, q) if kind == "inv" else _closed_maj(n, q)
    lhs = det(m)
    report = VerifyReport(f"group-{kind}")
    report.trials.append(Trial({"n": n, "q": q}, lhs, closed, lhs == closed))
    if with_spectrum:
        if kind != "maj":
            raise ValueError("spectrum check is only stated for kind='maj'")
        cp = char_poly(m)
        expected = _maj_spectrum(n, q)
        report.trials.append(Trial({"n": n, "q": q, "check": "spectrum"},
                                   cp, expected, cp == expected))
    return report


# ---------------------------------------------------------------------------
# meet/join determinants on partition lattices


def _dual(p: PosetData) -> PosetData:
    m = len(p.elements)
    h = p.height()
    leq = tuple(tuple(p.leq[j][i] for j in range(m)) for i in range(m))
    rank = tuple(h - r for r in p.rank)
    return PosetData(p.elements, leq, rank)


def _chi_full(i: int) -> PolyQ:
    return poset_char_poly(partition_lattice(i))


def _chi_full_dual_tilde(i: int) -> PolyQ:
    return reciprocal_poly(poset_char_poly(_dual(partition_lattice(i))))


def _chi_nc(i: int) -> PolyQ:
    return poset_char_poly(nc_lattice(i))


def _lattice_det(parts, q: Fraction, op) -> Fraction:
    m = len(parts)
    return det(MatrixR.build(
        m, m, lambda i, j: q ** op(parts[i], parts[j]).num_blocks))


def _nc_suite_sides(n: int, q: Fraction):
    parts = enumerate_partitions(n)
    ncs = enumerate_partitions(n, True)
    lhs = (
        _lattice_det(parts, q, partition_meet),
        _lattice_det(parts, q, lambda a, b: partition_join(a, b, "full")),
        _lattice_det(ncs, q, partition_meet),
        _lattice_det(ncs, q, lambda a, b: partition_join(a, b, "noncrossing")),
        _lattice_det(ncs, q, lambda a, b: partition_join(a, b, "full")),
    )
    r1 = Fraction(1)
    r2 = Fraction(1)
    for i in range(1, n + 1):
        r1 *= ((q * _chi_full_dual_tilde(i)(q))
               ** (_int_exp(binomial(n, i)) * _bell(n - i)))
        r2 *= (q * _chi_full(i)(q)) ** _int_exp(stirling2(n, i))
    r3 = q ** _int_exp(binomial(2 * n - 1, n))
    r4 = q ** _int_exp(binomial(2 * n, n) / (n + 1))
    for i in range(1, n + 1):
        e = _int_exp(binomial(2 * n - 1 - i, n - 1))
        chi = _chi_nc(i)
        r3 *= reciprocal_poly(chi)(q) ** e
        r4 *= chi(q) ** e
    return lhs, (r1, r2, r3, r4)


def _tutte_rhs(n: int, r: Fraction) -> Fraction:
    """The full-lattice-join determinant over noncrossing partitions at
    q = r^2 (so sqrt(q) = r is rational)."""
    q = r * r
    out = q ** _int_exp(binomial(2 * n - 1, n))
    for i in range(1, n):
        base = chebyshev_u(i + 1)(r / 2) / (q * chebyshev_u(i - 1)(r / 2))
        out *= base ** _int_exp(Fraction(i + 1, n) * binomial(2 * n, n - 1 - i))
    return out


def _nc_suite_trial(rng, n):
    r = rand_q(rng)
    q = r * r
    lhs, rhs4 = _nc_suite_sides(n, q)
    return {"q": q}, lhs, rhs4 + (_tutte_rhs(n, r),)


register(IdentityRecord(id="nc-suite", trial=_nc_suite_trial, max_n=4))


def _meander_rhs(n: int, q: Fraction) -> Fraction:
    def c(nn, h):
        return binomial(nn, (nn - h) // 2) - binomial(nn, (nn - h) // 2 - 1)
    out = Fraction(1)
    for i in range(1, n + 1):
        a = _int_exp(c(2 * n, 2 * i) - c(2 * n, 2 * i + 2))
        out *= chebyshev_u(i)(q / 2) ** a
    return out


def _meander_trial(rng, n):
    q = rand_q(rng)
    matchings = nc_matchings(2 * n)
    m = len(matchings)
    lhs = det(MatrixR.build(
        m, m, lambda i, j: q ** components(matchings[i], matchings[j])))
    return {"q": q}, lhs, _meander_rhs(n, q)


register(IdentityRecord(id="meander", trial=_meander_trial, max_n=4))


def verify_nc_suite(n: int, q) -> VerifyReport:
    """All five meet/join determinants plus the matching-superposition
    determinant at one rational q (the full-join case is checked at q^2
    so its square root is rational)."""
    q = rat(q)
    report = VerifyReport("nc-suite")
    lhs, rhs4 = _nc_suite_sides(n, q * q)
    rhs = rhs4 + (_tutte_rhs(n, q),)
    names = ("meet-full", "join-full", "meet-nc", "join-nc", "join-full-over-nc")
    for name, left, right in zip(names, lhs, rhs):
        report.trials.append(Trial({"n": n, "q": q * q, "check": name},
                                   left, right, left == right))
    matchings = nc_matchings(2 * n)
    m = len(matchings)
    left = det(MatrixR.build(
        m, m, lambda i, j: q ** components(matchings[i], matchings[j])))
    right = _meander_rhs(n, q)
    report.trials.append(Trial({"n": n, "q": q, "check": "matchings"},
                               left, right, left == right))
    return report


# ---------------------------------------------------------------------------
# the conjectured q-count determinant (numeric confirmation only)


def _build_okada(n, q):
    q = rat(q)

    def entry(i, j):
        i, j = i + 1, j + 1
        t1 = q ** (i + j - 1) * (q_binomial(i + j - 2, i - 1, q)
                                 + q * q_binomial(i + j - 1, i, q))
        if i == j:
            t1 += 1 + q ** i
        elif i == j + 1:
            t1 += -1
        return t1
    return MatrixR.build(n, n, entry)


def _closed_okada(n, q):
    q = rat(q)
    out = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                out *= ((1 - q ** (i + j + k - 1))
                        / (1 - q ** (i + j + k - 2))) ** 2
    return out


def _okada_trial(rng, n):
    q = rand_q(rng)
    return {"q": q}, det(_build_okada(n, q)), _closed_okada(n, q)


register(IdentityRecord(id="okada", trial=_okada_trial, max_n=4,
                        builder=_build_okada, closed=_closed_okada))


def verify_okada(n: int, q) -> VerifyReport:
    q = rat(q)
    lhs = det(_build_okada(n, q))
    rhs = _closed_okada(n, q)
    report = VerifyReport("okada", notes=("conjecture-consistent",))
    report.trials.append(Trial({"n": n, "q": q}, lhs, rhs, lhs == rhs))
    return report


# ---------------------------------------------------------------------------
# product of column-bracket minors


def _bracket(cols) -> Fraction:
    m = len(cols)
    return det(MatrixR.build(m, m, lambda r, c: cols[c][r]))


def _turnbull_sides(rng, n: int, m: int):
    a = {j: tuple(rand_frac(rng) for _ in range(m)) for j in range(2, m + 1)}
    b = {j: {k: tuple(rand_frac(rng) for _ in range(m))
             for k in range(1, j)} for j in range(2, n + 1)}
    x = {i: tuple(rand_frac(rng) for _ in range(m)) for i in range(1, n + 1)}

    def entry(i, j):
        i, j = i + 1, j + 1
        cols = [b[j][k] for k in range(1, j)] + [x[i]]
        cols += [a[t] for t in range(j + 1, m + 1)]
        return _bracket(cols)
    lhs = det(MatrixR.build(n, n, entry))
    rhs = _bracket([x[i] for i in range(1, n + 1)]
                   + [a[t] for t in range(n + 1, m + 1)])
    for j in range(2, n + 1):
        rhs *= _bracket([b[j][k] for k in range(1, j)]
                        + [a[t] for t in range(j, m + 1)])
    params = {"m": m, "a": a, "b": b, "x": x}
    return params, lhs, rhs


def _turnbull_trial(rng, n):
    m = rng.randint(n, 5)
    return _turnbull_sides(rng, n, m)


register(IdentityRecord(id="turnbull", trial=_turnbull_trial, max_n=4))


def verify_turnbull(n: int, m: int, seed: int = 0) -> VerifyReport:
    if not (1 <= n <= 4 and n <= m <= 5):
        raise ValueError("requires 1 <= n <= 4 and n <= m <= 5")
    report = VerifyReport("turnbull")
    for t in range(3):
        rng = trial_rng(seed, "turnbull", t)
        params, lhs, rhs = _turnbull_sides(rng, n, m)
        report.trials.append(Trial({"n": n, **params}, lhs, rhs, lhs == rhs))
    return report


# ---------------------------------------------------------------------------
# constant-term determinant invariance


def _goja_sides(rng, n: int, trunc: int):
    fs, hs, gs = [], [], []
    for _ in range(n):
        fs.append(TruncSeries(
            0, [rand_frac(rng) for _ in range(trunc)], trunc))
        hs.append(TruncSeries(
            1, [rand_nonzero(rng)] + [rand_frac(rng) for _ in range(trunc - 2)],
            trunc))
        gs.append(PolyQ([rand_frac(rng) for _ in range(4)]))

    def ct(series) -> Fraction:
        return series.constant_term()

    def entry_lhs(i, j):
        g_of_h = TruncSeries.from_poly(gs[i], trunc).compose(hs[j])
        return ct(fs[j] * hs[j].pow_int(-i) * g_of_h)

    def entry_rhs(i, j):
        return ct(fs[j] * hs[j].pow_int(-i)) * gs[i].coeff(0)

    lhs = det(MatrixR.build(n, n, entry_lhs))
    rhs = det(MatrixR.build(n, n, entry_rhs))
    params = {"F": fs, "H": hs, "G": gs}
    return params, lhs, rhs


def _goja_trial(rng, n):
    return _goja_sides(rng, n, 16)


register(IdentityRecord(id="goja", trial=_goja_trial, max_n=4))


def verify_goulden_jackson(n: int, trunc: int = 16, seed: int = 0) -> VerifyReport:
    if trunc < 4 * n:
        raise ValueError("trunc too small for exact constant terms")
    report = VerifyReport("goja")
    for t in range(3):
        rng = trial_rng(seed, "goja", t)
        params, lhs, rhs = _goja_sides(rng, n, trunc)
        report.trials.append(Trial({"n": n, **params}, lhs, rhs, lhs == rhs))
    return report


# ---------------------------------------------------------------------------
# derivative-power determinant


def _series_det(rows):
    """Laplace determinant over a list-of-lists of ring elements."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    out = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _series_det(minor)
        if j % 2:
            term = -term
        out = term if out is None else out + term
    return out


def _stwi_sides(rng, n: int, trunc: int):
    f = TruncSeries(
        0, [1, rand_nonzero(rng)] + [rand_frac(rng) for _ in range(trunc - 2)],
        trunc)
    a = sorted(rng.sample(range(-6, 7), n))
    u = f.derive() / f
    rows = [[TruncSeries.one(trunc)] * n]
    for _ in range(n - 1):
        prev = rows[-1]
        rows.append([a[j] * u * prev[j] + prev[j].derive()
                     for j in range(n)])
    lhs = _series_det(rows)
    rhs = u.pow_int(n * (n - 1) // 2)
    coef = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            coef *= a[j] - a[i]
    rhs = rhs * coef
    return {"f": f, "a": tuple(a)}, lhs, rhs


def _stwi_trial(rng, n):
    return _stwi_sides(rng, n, 16)


register(IdentityRecord(id="stwi", trial=_stwi_trial, max_n=4))


def verify_strehl_wilf(n: int, trunc: int = 16, seed: int = 0) -> VerifyReport:
    if trunc < 3 * n:
        raise ValueError("truncation shortfall")
    report = VerifyReport("stwi")
    for t in range(3):
        rng = trial_rng(seed, "stwi", t)
        params, lhs, rhs = _stwi_sides(rng, n, trunc)
        report.trials.append(Trial({"n": n, **params}, lhs, rhs, lhs == rhs))
    return report


# ---------------------------------------------------------------------------
# six-vertex partition function


def _izkor_sides(rng, n: int):
    q = rand_q(rng)
    vals = distinct_fracs(rng, 2 * n)
    x, y = vals[:n], vals[n:]
    if any(v == w or q * v == w for v in x for w in y):
        raise Resample
    lhs = det(MatrixR.build(
        n, n, lambda i, j: 1 / ((x[i] - y[j]) * (q * x[i] - y[j]))))
    pref = Fraction(-1) ** (n * (n - 1) // 2)
    for i in range(n):
        for j in range(i + 1, n):
            pref *= (x[i] - x[j]) * (y[i] - y[j])
    for v in x:
        for w in y:
            pref /= (v - w) * (q * v - w)
    s = sum((asm.six_vertex_weight(x, y, q) for asm in asm_enumerate(n)),
            Fraction(0))
    return {"q": q, "X": x, "Y": y}, lhs, pref * s


def _izkor_trial(rng, n):
    return _izkor_sides(rng, n)


register(IdentityRecord(id="izergin-korepin", trial=_izkor_trial, max_n=4))


def verify_izergin_korepin(n: int, seed: int = 0) -> VerifyReport:
    if n > 4:
        raise ValueError("n <= 4")
    report = VerifyReport("izergin-korepin")
    for t in range(3):
        rng = trial_rng(seed, "izergin-korepin", t)
        while True:
            try:
                params, lhs, rhs = _izkor_sides(rng, n)
                break
            except (Resample, ZeroDivisionError):
                continue
        report.trials.append(Trial({"n": n, **params}, lhs, rhs, lhs == rhs))
    return report
