"""Exact scalar arithmetic: rationals, dense univariate polynomials,
rational functions, truncated (Laurent) series, and the special
numbers/polynomials the determinant catalog consumes.

All arithmetic is over ``fractions.Fraction``; nothing here ever touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


def rat(value) -> Fraction:
    """Coerce ints, strings like ``"3/4"``, or Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def fmt_rat(x: Fraction) -> str:
    """Print a rational as ``p`` or ``p/q``."""
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# special functions on rationals


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def binomial(x, k: int) -> Fraction:
    """Generalized binomial coefficient x(x-1)...(x-k+1)/k!; 0 for k < 0."""
    if k < 0:
        return Fraction(0)
    x = rat(x)
    num = Fraction(1)
    for j in range(k):
        num *= x - j
    return num / factorial(k)


def pochhammer(a, k: int) -> Fraction:
    """Shifted factorial (a)_k = a(a+1)...(a+k-1), with the reciprocal
    convention (a)_{-m} = 1/((a-1)(a-2)...(a-m)) for negative k."""
    a = rat(a)
    if k >= 0:
        out = Fraction(1)
        for j in range(k):
            out *= a + j
        return out
    out = Fraction(1)
    for j in range(1, -k + 1):
        f = a - j
        if f == 0:
            raise ZeroDivisionError(f"pochhammer({a}, {k}): factor a-{j} vanishes")
        out *= f
    return 1 / out


def q_pochhammer(a, q, k: int) -> Fraction:
    """q-shifted factorial (a;q)_k, with the reciprocal convention
    (a;q)_{-m} = 1/((1-a/q)(1-a/q^2)...(1-a/q^m)) for negative k."""
    a, q = rat(a), rat(q)
    if k >= 0:
        out = Fraction(1)
        pw = Fraction(1)
        for _ in range(k):
            out *= 1 - a * pw
            pw *= q
        return out
    out = Fraction(1)
    pw = Fraction(1)
    for j in range(1, -k + 1):
        pw /= q
        f = 1 - a * pw
        if f == 0:
            raise ZeroDivisionError(f"q_pochhammer({a}, {q}, {k}): factor 1-a*q^-{j} vanishes")
        out *= f
    return 1 / out


def q_int(n: int, q) -> Fraction:
    """[n]_q = (1-q^n)/(1-q)."""
    q = rat(q)
    if q == 1:
        return Fraction(n)
    return (1 - q**n) / (1 - q)


def q_factorial(n: int, q) -> Fraction:
    """[n]_q! = [n]_q [n-1]_q ... [1]_q."""
    out = Fraction(1)
    for j in range(1, n + 1):
        out *= q_int(j, q)
    return out


def q_binomial(alpha: int, k: int, q) -> Fraction:
    """Gaussian binomial [alpha choose k]_q; 0 for k < 0; binomial at q=1."""
    if k < 0:
        return Fraction(0)
    q = rat(q)
    if q == 1:
        return binomial(alpha, k)
    if q == 0:
        raise ZeroDivisionError("q_binomial undefined at q = 0")
    num = Fraction(1)
    den = Fraction(1)
    for j in range(k):
        num *= 1 - q ** (alpha - j)
        den *= 1 - q ** (j + 1)
    if den == 0:
        raise ZeroDivisionError(f"q_binomial({alpha}, {k}, {q}): denominator vanishes")
    return num / den


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class PolyQ:
    """Dense univariate polynomial over Q, coefficients lowest-first.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([rat(c) for c in coeffs])

    @staticmethod
    def constant(c) -> "PolyQ":
        return PolyQ([rat(c)])

    @staticmethod
    def x() -> "PolyQ":
        return PolyQ([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * rat(x) + c
        return out

    def _coerce(self, other):
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyQ.constant(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PolyQ", self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyQ([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = PolyQ.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return PolyQ([a / c for a in self.coeffs])
        return NotImplemented

    def divmod(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.leading()
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] / lead
            if c == 0:
                continue
            quot[i - d] = c
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] -= c * b
        return PolyQ(quot), PolyQ(rem[:d] if d > 0 else [])

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return self.divmod(other)[0]

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return self.divmod(other)[1]

    def derivative(self) -> "PolyQ":
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "PolyQ":
        if self.is_zero():
            return self
        return self / self.leading()

    def compose(self, other: "PolyQ") -> "PolyQ":
        out = PolyQ()
        for c in reversed(self.coeffs):
            out = out * other + PolyQ.constant(c)
        return out

    def shift(self, k: int) -> "PolyQ":
        """Multiply by x^k (k >= 0)."""
        if self.is_zero():
            return self
        return PolyQ([Fraction(0)] * k + list(self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "PolyQ(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(fmt_rat(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if c == 1 else f"{fmt_rat(c)}*{xs}")
        return "PolyQ(" + " + ".join(terms) + ")"


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


# ---------------------------------------------------------------------------
# rational functions


class RatFn:
    """Quotient of two PolyQ; denominator monic and coprime to numerator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = PolyQ.constant(num)
        if den is None:
            den = PolyQ.constant(1)
        elif isinstance(den, (int, Fraction)):
            den = PolyQ.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if not g.is_zero() and g.degree > 0:
            num = num // g
            den = den // g
        lead = den.leading()
        self.num = num / lead
        self.den = den / lead

    def _coerce(self, other):
        if isinstance(other, RatFn):
            return other
        if isinstance(other, (int, Fraction, PolyQ)):
            return RatFn(other if isinstance(other, PolyQ) else PolyQ.constant(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFn", self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __call__(self, x) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("rational function pole")
        return self.num(x) / d

    def derivative(self) -> "RatFn":
        return RatFn(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __repr__(self):
        if self.den == PolyQ.constant(1):
            return f"RatFn({self.num!r})"
        return f"RatFn({self.num!r} / {self.den!r})"


# ---------------------------------------------------------------------------
# truncated (Laurent) series


class TruncSeries:
    """Truncated Laurent series: coefficient i is the term of exponent
    valuation + i; terms of exponent >= order are unknown."""

    __slots__ = ("valuation", "order", "coeffs")

    def __init__(self, valuation: int, coeffs: Iterable, order: int = None):
        coeffs = [rat(c) for c in coeffs]
        if order is None:
            order = valuation + len(coeffs)
        if order <= valuation:
            raise ValueError("order must exceed valuation")
        if len(coeffs) != order - valuation:
            raise ValueError("coefficient count does not match order - valuation")
        self.valuation = valuation
        self.order = order
        self.coeffs = tuple(coeffs)

    @staticmethod
    def from_poly(p: PolyQ, order: int) -> "TruncSeries":
        return TruncSeries(0, [p.coeff(i) for i in range(order)], order)

    @staticmethod
    def one(order: int) -> "TruncSeries":
        return TruncSeries.from_poly(PolyQ.constant(1), order)

    @staticmethod
    def var(order: int) -> "TruncSeries":
        return TruncSeries.from_poly(PolyQ.x(), order)

    def coeff(self, exponent: int) -> Fraction:
        if exponent >= self.order:
            raise ValueError(f"coefficient of x^{exponent} beyond truncation order {self.order}")
        i = exponent - self.valuation
        return self.coeffs[i] if i >= 0 else Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coeff(0)

    def true_valuation(self):
        """Exponent of the lowest nonzero known term; None if all known are 0."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return self.valuation + i
        return None

    def _align(self, other: "TruncSeries"):
        val = min(self.valuation, other.valuation)
        order = min(self.order, other.order)
        if order <= val:
            raise ValueError("series have no overlapping window")
        a = [self.coeff(e) if self.valuation <= e < self.order else Fraction(0) for e in range(val, order)]
        b = [other.coeff(e) if other.valuation <= e < other.order else Fraction(0) for e in range(val, order)]
        return val, order, a, b

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries(0, [rat(other)] + [0] * (self.order - 1), self.order) if self.order > 0 else NotImplemented
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        val, order, a, b = self._align(other)
        return a == b

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        val, order, a, b = self._align(other)
        return TruncSeries(val, [x + y for x, y in zip(a, b)], order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.valuation, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return TruncSeries(self.valuation, [c * x for x in self.coeffs], self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        # the product is reliable up to min over known windows
        val = self.valuation + other.valuation
        order = min(self.order + other.valuation, other.order + self.valuation)
        out = [Fraction(0)] * (order - val)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k < len(out):
                    out[k] += a * b
        return TruncSeries(val, out, order)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        tv = self.true_valuation()
        if tv is None:
            raise ZeroDivisionError("inverse of (truncated) zero series")
        shift = tv - self.valuation
        a = self.coeffs[shift:]
        n = len(a)
        inv = [Fraction(0)] * n
        inv[0] = 1 / a[0]
        for k in range(1, n):
            s = Fraction(0)
            for j in range(1, k + 1):
                s += a[j] * inv[k - j]
            inv[k] = -s / a[0]
        return TruncSeries(-tv, inv, -tv + n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return TruncSeries(self.valuation, [x / c for x in self.coeffs], self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def pow_int(self, n: int) -> "TruncSeries":
        if n < 0:
            return self.inverse().pow_int(-n)
        order = self.order  # keep caller's window
        out = TruncSeries(0, [1] + [0] * max(0, order - 1), max(order, 1))
        base = self
        for _ in range(n):
            out = out * base
        return out

    __pow__ = pow_int

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """self(inner); requires self a power series (valuation >= 0 terms
        only) and inner with valuation >= 1."""
        if self.valuation < 0 and any(c != 0 for c in self.coeffs[: -self.valuation]):
            raise ValueError("compose requires a power-series outer operand")
        itv = inner.true_valuation()
        if itv is not None and itv < 1:
            raise ValueError("compose requires inner valuation >= 1")
        order = min(self.order, inner.order)
        out = TruncSeries(0, [0] * order, order)
        pw = TruncSeries(0, [1] + [0] * (order - 1), order)
        for e in range(0, self.order):
            c = self.coeff(e) if e >= self.valuation else Fraction(0)
            if c != 0:
                out = out + c * pw
            if e + 1 < self.order:
                pw = (pw * inner).restrict(order)
        return out.restrict(order)

    def restrict(self, order: int) -> "TruncSeries":
        """Truncate to a smaller order (padding is never invented)."""
        if order > self.order:
            raise ValueError("cannot extend truncation order")
        return TruncSeries(self.valuation, self.coeffs[: order - self.valuation], order)

    def derive(self) -> "TruncSeries":
        out = []
        for i, c in enumerate(self.coeffs):
            e = self.valuation + i
            if e != 0:
                out.append((e, e * c))
        if not out:
            return TruncSeries(self.valuation - 1, [0] * len(self.coeffs), self.order - 1)
        val = self.valuation - 1
        order = self.order - 1
        lst = [Fraction(0)] * (order - val)
        for e, c in out:
            lst[e - 1 - val] = c
        return TruncSeries(val, lst, order)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.valuation + i
            if e == 0:
                terms.append(fmt_rat(c))
            else:
                xs = "x" if e == 1 else f"x^{e}"
                terms.append(xs if c == 1 else f"{fmt_rat(c)}*{xs}")
        body = " + ".join(terms) if terms else "0"
        return f"TruncSeries({body} + O(x^{self.order}))"


def series_arith(op: str, *operands, aux: int = None):
    """Dispatch helper mirroring the module contract."""
    if op == "mul":
        return operands[0] * operands[1]
    if op == "div":
        return operands[0] / operands[1]
    if op == "compose":
        return operands[0].compose(operands[1])
    if op == "derive":
        return operands[0].derive()
    if op == "pow_int":
        return operands[0].pow_int(aux)
    if op == "constant_term":
        return operands[0].constant_term()
    raise ValueError(f"unknown series op {op!r}")


def exp_series(order: int) -> TruncSeries:
    return TruncSeries(0, [Fraction(1, factorial(k)) for k in range(order)], order)


def cos_series(order: int) -> TruncSeries:
    return TruncSeries(
        0,
        [Fraction((-1) ** (k // 2), factorial(k)) if k % 2 == 0 else Fraction(0) for k in range(order)],
        order,
    )


# ---------------------------------------------------------------------------
# divided differences


def divided_differences(f: PolyQ, points: Sequence) -> list[Fraction]:
    """Newton divided-difference coefficients of f over distinct points."""
    pts = [rat(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("divided differences require pairwise distinct points")
    table = [f(p) for p in pts]
    out = [table[0]] if table else []
    for level in range(1, len(pts)):
        table = [
            (table[i + 1] - table[i]) / (pts[i + level] - pts[i])
            for i in range(len(table) - 1)
        ]
        out.append(table[0])
    return out


# ---------------------------------------------------------------------------
# special sequences and polynomials


@lru_cache(maxsize=None)
def _bernoulli_table(count: int) -> tuple[Fraction, ...]:
    # z/(e^z - 1) = sum B_k z^k / k!
    order = count
    egf = exp_series(order + 1)
    shifted = TruncSeries(0, [egf.coeff(k + 1) for k in range(order)], order)  # (e^z-1)/z
    inv = shifted.inverse()
    return tuple(inv.coeff(k) * factorial(k) for k in range(count))


def bernoulli(k: int) -> Fraction:
    return _bernoulli_table(k + 1)[k]


@lru_cache(maxsize=None)
def _euler_even_table(count: int) -> tuple[Fraction, ...]:
    # 1/cos z = sum E_{2k} z^{2k} / (2k)!
    order = 2 * count + 1
    sec = cos_series(order).inverse()
    return tuple(sec.coeff(2 * k) * factorial(2 * k) for k in range(count))


def euler_even(k: int) -> Fraction:
    """Secant number E_{2k}' indexed by the even subscript: euler_even(2m)."""
    if k % 2 != 0:
        raise ValueError("euler_even takes an even index")
    return _euler_even_table(k // 2 + 1)[k // 2]


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> Fraction:
    if m == 0 and k == 0:
        return Fraction(1)
    if m <= 0 or k <= 0 or k > m:
        return Fraction(0)
    return stirling2(m - 1, k - 1) + k * stirling2(m - 1, k)


@lru_cache(maxsize=None)
def stirling1_unsigned(m: int, k: int) -> Fraction:
    if m == 0 and k == 0:
        return Fraction(1)
    if m <= 0 or k <= 0 or k > m:
        return Fraction(0)
    return stirling1_unsigned(m - 1, k - 1) + (m - 1) * stirling1_unsigned(m - 1, k)


def catalan(n: int) -> Fraction:
    return binomial(2 * n, n) / (n + 1)


def asm_count(n: int) -> Fraction:
    """Number of n x n alternating sign matrices."""
    out = Fraction(1)
    for i in range(n):
        out *= Fraction(factorial(3 * i + 1), factorial(n + i))
    return out


def special_sequence(kind: str, *args) -> Fraction:
    table = {
        "bernoulli": bernoulli,
        "euler_even": euler_even,
        "stirling2": stirling2,
        "stirling1": stirling1_unsigned,
        "asm": asm_count,
        "catalan": catalan,
    }
    if kind not in table:
        raise ValueError(f"unknown sequence kind {kind!r}")
    return table[kind](*args)


def bell_poly(m: int) -> PolyQ:
    return PolyQ([stirling2(m, k) for k in range(m + 1)])


def hermite_poly(m: int) -> PolyQ:
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m // 2 + 1):
        coeffs[m - 2 * k] = Fraction(factorial(m), factorial(k) * factorial(m - 2 * k)) * Fraction(-1, 2) ** k
    return PolyQ(coeffs)


def chebyshev_u(m: int) -> PolyQ:
    coeffs = [Fraction(0)] * (m + 1)
    for j in range(m // 2 + 1):
        coeffs[m - 2 * j] += (-1) ** j * binomial(m - j, j) * Fraction(2) ** (m - 2 * j)
    return PolyQ(coeffs)


def special_poly(kind: str, m: int) -> PolyQ:
    if m < 0:
        raise ValueError("special_poly index must be nonnegative")
    table = {"bell": bell_poly, "hermite": hermite_poly, "chebyshev_u": chebyshev_u}
    if kind not in table:
        raise ValueError(f"unknown polynomial kind {kind!r}")
    return table[kind](m)
