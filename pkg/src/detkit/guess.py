"""Closed-form sequence guessing by rational interpolation over
successive-quotient towers, plus the determinant-polynomial
interpolation and rational-linear-factor extraction used by the
identification-of-factors workflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exactnum import PolyQ, RatFn, fmt_rat, rat
from .linalg import MatrixR, kernel_basis


# ---------------------------------------------------------------------------
# rational interpolation


def fit_rational(points: Sequence[tuple]) -> Optional[RatFn]:
    """Fit a rational function through `points`, holding out the last
    point as validator.

    Degree splits (num_deg, den_deg) are searched in order of increasing
    total degree, numerator-heavy first, subject to
    num_deg + den_deg + 2 <= len(points).  The first candidate that
    reproduces every point (including the held-out last one) wins.
    """
    pts = [(rat(x), rat(y)) for x, y in points]
    if len({x for x, _ in pts}) != len(pts):
        raise ValueError("x-values must be distinct")
    m = len(pts)
    if m < 2:
        return None
    fit_pts = pts[:-1]
    for total in range(0, m - 1):
        for dn in range(total, -1, -1):
            dd = total - dn
            if dn + dd + 2 > m:
                continue
            cand = _solve_split(fit_pts, dn, dd)
            if cand is None:
                continue
            if _fits_all(cand, pts):
                return cand
    return None


def _solve_split(pts, dn: int, dd: int) -> Optional[RatFn]:
    # linearized system: sum a_i x^i - y * sum b_j x^j = 0
    cols = dn + 1 + dd + 1
    rows = []
    for x, y in pts:
        rows.append([x**i for i in range(dn + 1)] + [-y * x**j for j in range(dd + 1)])
    kern = kernel_basis(MatrixR.from_rows(rows)) if rows else []
    for v in kern:
        num = PolyQ(v[: dn + 1])
        den = PolyQ(v[dn + 1 :])
        if den.is_zero():
            continue
        return RatFn(num, den)
    return None


def _fits_all(fn: RatFn, pts) -> bool:
    for x, y in pts:
        if fn.den(x) == 0:
            return False
        if fn(x) != y:
            return False
    return True


# ---------------------------------------------------------------------------
# the guessing cascade


@dataclass(frozen=True)
class GuessExpr:
    """Nested-product closed form: `law` is the fitted rational law of the
    `level`-th successive-quotient sequence, and `initials[k]` is the
    first term of the k-th quotient sequence for k < level.

    parity is None for a guess on the full sequence, or 0/1 when the
    guess applies to the even-/odd-indexed subsequence only.
    """

    level: int
    initials: tuple[Fraction, ...]
    law: RatFn
    parity: Optional[int] = None

    @property
    def rationals(self) -> tuple[RatFn, ...]:
        """One entry per level, the last being the quotient law."""
        return tuple(RatFn(c) for c in self.initials) + (self.law,)

    def evaluate(self, n: int) -> Fraction:
        """Value of the guessed sequence at 1-based position n."""
        if n < 1:
            raise ValueError("positions are 1-based")
        return self._term(0, n)

    def _term(self, k: int, i: int) -> Fraction:
        if k == self.level:
            return self.law(Fraction(i))
        out = self.initials[k]
        for j in range(1, i):
            out *= self._term(k + 1, j)
        return out

    def __str__(self):
        body = _ratfn_str(self.law, "k")
        if self.level == 0:
            s = f"n -> {_ratfn_str(self.law, 'n')}"
        else:
            s = body
            for k in range(self.level - 1, -1, -1):
                c = fmt_rat(self.initials[k])
                s = f"{c} * prod_(k<n) [{s}]"
            s = f"n -> {s}"
        if self.parity is not None:
            s += f"  (on the {'even' if self.parity == 0 else 'odd'}-position subsequence)"
        return s


def _poly_str(p: PolyQ, var: str) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(fmt_rat(c))
        else:
            v = var if i == 1 else f"{var}^{i}"
            terms.append(v if c == 1 else f"{fmt_rat(c)}*{v}")
    return " + ".join(terms)


def _ratfn_str(f: RatFn, var: str) -> str:
    if f.den == PolyQ.constant(1):
        return _poly_str(f.num, var)
    return f"({_poly_str(f.num, var)})/({_poly_str(f.den, var)})"


class ZeroTermError(ValueError):
    """A zero term blocks the successive-quotient levels."""


def rate_guess(terms: Sequence, max_level: int = 3) -> list[GuessExpr]:
    """Try rational laws on the sequence and its successive-quotient
    towers up to max_level; return every accepted guess."""
    if max_level > 3:
        raise ValueError("max_level capped at 3")
    terms = [rat(t) for t in terms]
    out = _cascade(terms, max_level, None)
    if not out and len(terms) >= 6:
        # split-definition retry on the two parity subsequences
        for parity in (0, 1):
            sub = terms[parity::2]
            for g in _cascade(sub, max_level, parity):
                out.append(g)
    return out


def _cascade(terms: list[Fraction], max_level: int, parity) -> list[GuessExpr]:
    out = []
    seq = list(terms)
    initials: list[Fraction] = []
    for level in range(0, max_level + 1):
        if len(seq) >= 2:
            law = fit_rational([(i, seq[i - 1]) for i in range(1, len(seq) + 1)])
            if law is not None:
                g = GuessExpr(level, tuple(initials), law, parity)
                if all(g.evaluate(i) == terms[i - 1] for i in range(1, len(terms) + 1)):
                    out.append(g)
        if level == max_level:
            break
        if any(t == 0 for t in seq):
            if not out:
                raise ZeroTermError("zero term blocks successive-quotient levels")
            break
        if len(seq) < 2:
            break
        initials.append(seq[0])
        seq = [seq[i + 1] / seq[i] for i in range(len(seq) - 1)]
    return out


# ---------------------------------------------------------------------------
# determinant-polynomial interpolation


def lagrange_interpolate(points: Sequence[tuple]) -> PolyQ:
    pts = [(rat(x), rat(y)) for x, y in points]
    out = PolyQ()
    for i, (xi, yi) in enumerate(pts):
        li = PolyQ.constant(1)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j != i:
                li = li * PolyQ([-xj, 1])
                denom *= xi - xj
        out = out + li * (yi / denom)
    return out


def interpolate_det_poly(
    identity_id: str, fixed_params: dict, free_name: str, n: int, degree_bound: int
) -> PolyQ:
    """Exact determinant as a polynomial in one free parameter, by
    Lagrange interpolation on degree_bound + 1 integer sample points."""
    from . import catalog
    from .linalg import det

    points = []
    value = 0
    attempts = 0
    while len(points) < degree_bound + 1:
        attempts += 1
        if attempts > 10 * (degree_bound + 1) + 50:
            raise RuntimeError("sampling failure: too many out-of-domain points")
        params = dict(fixed_params)
        params[free_name] = Fraction(value)
        value += 1
        try:
            m = catalog.build_matrix(identity_id, n=n, **params)
            d = det(m)
        except (ZeroDivisionError, ValueError, ArithmeticError):
            continue
        points.append((params[free_name], d))
    return lagrange_interpolate(points)


# ---------------------------------------------------------------------------
# rational linear factors


def _rational_roots(p: PolyQ) -> list[Fraction]:
    """All rational roots of p, via the rational-root bound on the
    primitive integer form."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    # strip x^k
    low = 0
    while p.coeff(low) == 0:
        low += 1
    roots = [Fraction(0)] if low > 0 else []
    coeffs = list(p.coeffs[low:])
    from math import gcd, lcm

    denom = lcm(*[c.denominator for c in coeffs]) if len(coeffs) > 1 else coeffs[0].denominator
    ints = [int(c * denom) for c in coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(m):
        out = []
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.append(d)
                out.append(m // d)
            d += 1
        return sorted(set(out))

    for num in divisors(a0):
        for den in divisors(an):
            for s in (1, -1):
                cand = Fraction(s * num, den)
                if cand not in roots and p(cand) == 0:
                    roots.append(cand)
    return roots


def linear_factors(p: PolyQ):
    """((root, multiplicity) list, cofactor with no rational roots)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    out = []
    for r in sorted(_rational_roots(p)):
        mult = 0
        lin = PolyQ([-r, 1])
        while True:
            q, rem = p.divmod(lin)
            if rem.is_zero():
                p = q
                mult += 1
            else:
                break
        if mult:
            out.append((r, mult))
    return out, p
