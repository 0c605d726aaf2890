"""Dense exact matrices and the matrix algorithms the verification
engine needs: four determinant strategies, permanent, Pfaffian,
LU in the M*U = L form, kernel bases, characteristic polynomial,
and the Sylvester resultant.

Entries may be Fractions, PolyQ, or RatFn; one scalar kind per matrix.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Callable, Sequence

from .exactnum import PolyQ, RatFn, rat


class MatrixR:
    """Immutable dense matrix; entries row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "MatrixR":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return MatrixR(r, c, flat)

    @staticmethod
    def build(rows: int, cols: int, fn: Callable[[int, int], object]) -> "MatrixR":
        return MatrixR(rows, cols, [fn(i, j) for i in range(rows) for j in range(cols)])

    @staticmethod
    def identity(n: int) -> "MatrixR":
        return MatrixR.build(n, n, lambda i, j: Fraction(1 if i == j else 0))

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, keep_rows: Sequence[int], keep_cols: Sequence[int]) -> "MatrixR":
        return MatrixR.build(
            len(keep_rows), len(keep_cols), lambda i, j: self[keep_rows[i], keep_cols[j]]
        )

    def minor(self, i: int, j: int) -> "MatrixR":
        return self.submatrix(
            [r for r in range(self.rows) if r != i],
            [c for c in range(self.cols) if c != j],
        )

    def transpose(self) -> "MatrixR":
        return MatrixR.build(self.cols, self.rows, lambda i, j: self[j, i])

    def __eq__(self, other):
        if not isinstance(other, MatrixR):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    def __mul__(self, other):
        if isinstance(other, MatrixR):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            def entry(i, j):
                acc = self[i, 0] * other[0, j]
                for k in range(1, self.cols):
                    acc = acc + self[i, k] * other[k, j]
                return acc
            return MatrixR.build(self.rows, other.cols, entry)
        return MatrixR(self.rows, self.cols, [e * other for e in self.entries])

    def __add__(self, other):
        if not isinstance(other, MatrixR) or (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return MatrixR(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (other * -1)

    def apply(self, fn) -> "MatrixR":
        return MatrixR(self.rows, self.cols, [fn(e) for e in self.entries])

    def mul_vector(self, v: Sequence):
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            acc = self[i, 0] * v[0]
            for k in range(1, self.cols):
                acc = acc + self[i, k] * v[k]
            out.append(acc)
        return out

    def __repr__(self):
        return f"MatrixR({self.to_rows()!r})"


def _zero_like(m: MatrixR):
    e = m.entries[0]
    if isinstance(e, PolyQ):
        return PolyQ()
    if isinstance(e, RatFn):
        return RatFn(PolyQ())
    return Fraction(0)


def _one_like(m: MatrixR):
    e = m.entries[0]
    if isinstance(e, PolyQ):
        return PolyQ.constant(1)
    if isinstance(e, RatFn):
        return RatFn(1)
    return Fraction(1)


def _is_zero(x) -> bool:
    if isinstance(x, (PolyQ, RatFn)):
        return x.is_zero()
    return x == 0


def _det_laplace(m: MatrixR):
    n = m.rows
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0, 0]
    if n == 2:
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    acc = None
    for j in range(n):
        if _is_zero(m[0, j]):
            continue
        term = m[0, j] * _det_laplace(m.minor(0, j))
        if j % 2:
            term = term * -1
        acc = term if acc is None else acc + term
    return acc if acc is not None else _zero_like(m)


def _det_gauss(m: MatrixR):
    n = m.rows
    if n == 0:
        return Fraction(1)
    a = m.to_rows()
    if isinstance(m.entries[0], PolyQ):
        a = [[RatFn(e) for e in row] for row in a]
    det = _one_like(m) if not isinstance(m.entries[0], PolyQ) else RatFn(1)
    sign = 1
    for k in range(n):
        piv = None
        for i in range(k, n):
            if not _is_zero(a[i][k]):
                piv = i
                break
        if piv is None:
            return _zero_like(m)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        p = a[k][k]
        det = det * p
        for i in range(k + 1, n):
            if _is_zero(a[i][k]):
                continue
            f = a[i][k] / p
            for j in range(k, n):
                a[i][j] = a[i][j] - f * a[k][j]
    det = det * sign
    if isinstance(m.entries[0], PolyQ):
        # exact division guaranteed: the determinant is polynomial
        q, r = det.num.divmod(det.den)
        if not r.is_zero():
            raise ArithmeticError("gauss over PolyQ produced a non-polynomial determinant")
        return q
    return det


def _exquo(a, b):
    """Exact division in the entry domain (Bareiss step)."""
    if isinstance(a, PolyQ):
        q, r = a.divmod(b)
        if not r.is_zero():
            raise ArithmeticError("Bareiss exact division failed")
        return q
    return a / b


def _det_bareiss(m: MatrixR):
    n = m.rows
    if n == 0:
        return Fraction(1)
    if isinstance(m.entries[0], RatFn):
        raise ValueError("bareiss requires an integral-domain scalar kind")
    a = m.to_rows()
    sign = 1
    prev = _one_like(m)
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _zero_like(m)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                if k != 0:
                    elt = _exquo(elt, prev)
                a[i][j] = elt
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def _det_condensation(m: MatrixR):
    """Dodgson condensation; any zero interior cell of the current layer is
    repaired by evaluating the corresponding connected minor directly."""
    n = m.rows
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0, 0]

    def connected_minor(i, j, size):
        # det of the size x size block with top-left corner (i, j)
        sub = m.submatrix(range(i, i + size), range(j, j + size))
        return _det_gauss(sub)

    cur = [[m[i, j] for j in range(n)] for i in range(n)]  # size-1 minors
    prev = [[_one_like(m)] * (n + 1) for _ in range(n + 1)]  # size-0 minors
    for size in range(2, n + 1):
        dim = n - size + 1
        nxt = [[None] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(dim):
                denom = prev[i + 1][j + 1]
                num = cur[i][j] * cur[i + 1][j + 1] - cur[i + 1][j] * cur[i][j + 1]
                if _is_zero(denom):
                    nxt[i][j] = connected_minor(i, j, size)
                else:
                    nxt[i][j] = _exquo(num, denom)
        prev = [[cur[i][j] for j in range(len(cur))] for i in range(len(cur))]
        cur = nxt
    return cur[0][0]


_STRATEGIES = {
    "laplace": _det_laplace,
    "gauss": _det_gauss,
    "bareiss": _det_bareiss,
    "condensation": _det_condensation,
}


def det(m: MatrixR, strategy: str = None):
    if m.rows != m.cols:
        raise ValueError("determinant of non-square matrix")
    if strategy is None:
        strategy = "gauss" if isinstance(m.entries[0] if m.entries else None, RatFn) else "bareiss"
        if m.rows == 0:
            strategy = "laplace"
    if strategy == "laplace" and m.rows > 7:
        raise ValueError("laplace capped at n <= 7")
    if strategy not in _STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    return _STRATEGIES[strategy](m)


def permanent(m: MatrixR):
    """Permanent by inclusion-exclusion over column subsets (Ryser)."""
    if m.rows != m.cols:
        raise ValueError("permanent of non-square matrix")
    n = m.rows
    if n > 9:
        raise ValueError("permanent capped at n <= 9")
    if n == 0:
        return Fraction(1)
    total = None
    for mask in range(1, 1 << n):
        cols = [j for j in range(n) if mask >> j & 1]
        prod = None
        for i in range(n):
            s = m[i, cols[0]]
            for j in cols[1:]:
                s = s + m[i, j]
            prod = s if prod is None else prod * s
        if (n - len(cols)) % 2:
            prod = prod * -1
        total = prod if total is None else total + prod
    return total


def _check_skew(m: MatrixR):
    if m.rows != m.cols:
        raise ValueError("pfaffian of non-square matrix")
    n = m.rows
    for i in range(n):
        for j in range(i, n):
            if not _is_zero(m[i, j] + m[j, i]):
                raise ValueError("pfaffian requires a skew-symmetric matrix")


def pfaffian(m: MatrixR, strategy: str = "expansion"):
    """Pfaffian of a skew-symmetric matrix of even dimension <= 12.

    Sign convention: Pf([[0, 1], [-1, 0]]) = +1.
    """
    _check_skew(m)
    n = m.rows
    if n % 2:
        raise ValueError("pfaffian requires even dimension")
    if n > 12:
        raise ValueError("pfaffian capped at 2n <= 12")
    if strategy == "matching_sum":
        return _pfaffian_matchings(m)
    return _pfaffian_expand(m, list(range(n)))


def _pfaffian_expand(m: MatrixR, idx: list[int]):
    if not idx:
        return Fraction(1)
    i0 = idx[0]
    acc = None
    for pos in range(1, len(idx)):
        j = idx[pos]
        if _is_zero(m[i0, j]):
            continue
        rest = [k for k in idx[1:] if k != j]
        term = m[i0, j] * _pfaffian_expand(m, rest)
        if (pos - 1) % 2:
            term = term * -1
        acc = term if acc is None else acc + term
    return acc if acc is not None else _zero_like(m)


def _matchings(points: list[int]):
    if not points:
        yield []
        return
    a = points[0]
    for k in range(1, len(points)):
        b = points[k]
        rest = points[1:k] + points[k + 1 :]
        for rest_match in _matchings(rest):
            yield [(a, b)] + rest_match


def _crossings(match: list[tuple[int, int]]) -> int:
    c = 0
    for x in range(len(match)):
        for y in range(x + 1, len(match)):
            a, b = match[x]
            cc, d = match[y]
            if a < cc < b < d or cc < a < d < b:
                c += 1
    return c


def _pfaffian_matchings(m: MatrixR):
    n = m.rows
    acc = None
    for match in _matchings(list(range(n))):
        prod = None
        for a, b in match:
            prod = m[a, b] if prod is None else prod * m[a, b]
        if _crossings(match) % 2:
            prod = prod * -1
        acc = prod if acc is None else acc + prod
    return acc if acc is not None else Fraction(1)


class SingularMinorError(ValueError):
    def __init__(self, index):
        super().__init__(f"principal minor of order {index} vanishes")
        self.index = index


def lu_decompose(m: MatrixR) -> tuple[MatrixR, MatrixR]:
    """Find unit upper triangular U with M*U = L lower triangular.

    Requires every top-left principal minor of M to be nonzero; then
    prod(diag(L)) = det(M).
    """
    if m.rows != m.cols:
        raise ValueError("lu_decompose requires a square matrix")
    n = m.rows
    one = _one_like(m) if n else Fraction(1)
    zero = _zero_like(m) if n else Fraction(0)
    ucols = []  # column j of U as a list of length n
    for j in range(n):
        # unknowns u[0..j-1]; equations: sum_k M[i,k] u[k] + M[i,j] = 0 for i < j
        if j > 0:
            sub = m.submatrix(range(j), range(j))
            rhs = [m[i, j] * -1 for i in range(j)]
            try:
                u = solve_linear(sub, rhs)
            except ValueError:
                raise SingularMinorError(j) from None
        else:
            u = []
        col = list(u) + [one] + [zero] * (n - j - 1)
        ucols.append(col)
    U = MatrixR.build(n, n, lambda i, j: ucols[j][i])
    L = m * U
    for j in range(n):
        if _is_zero(L[j, j]):
            raise SingularMinorError(j + 1)
    return L, U


def solve_linear(a: MatrixR, rhs: Sequence):
    """Solve a*x = rhs exactly; raises ValueError if a is singular."""
    n = a.rows
    if a.cols != n or len(rhs) != n:
        raise ValueError("shape mismatch")
    poly_mode = isinstance(a.entries[0], PolyQ) if a.entries else False
    rows = [
        [RatFn(e) if poly_mode else e for e in a.row(i)]
        + [RatFn(rhs[i]) if poly_mode else rhs[i]]
        for i in range(n)
    ]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if not _is_zero(rows[i][k]):
                piv = i
                break
        if piv is None:
            raise ValueError("singular system")
        rows[k], rows[piv] = rows[piv], rows[k]
        p = rows[k][k]
        rows[k] = [e / p for e in rows[k]]
        for i in range(n):
            if i != k and not _is_zero(rows[i][k]):
                f = rows[i][k]
                rows[i] = [e - f * rk for e, rk in zip(rows[i], rows[k])]
    return [rows[i][n] for i in range(n)]


def kernel_basis(m: MatrixR) -> list[list[Fraction]]:
    """Basis of the right null space over Q via exact RREF."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    ncols = m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [e / p for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [e - f * rc for e, rc in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -rows[ri][fc]
        basis.append(v)
    return basis


def char_poly(m: MatrixR) -> PolyQ:
    """det(lambda*I - M) by the Faddeev-LeVerrier recursion."""
    if m.rows != m.cols:
        raise ValueError("char_poly requires a square matrix")
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = MatrixR.identity(n)
    for k in range(1, n + 1):
        mk = m * mk
        trace = sum((mk[i, i] for i in range(n)), Fraction(0))
        c = -trace / k
        coeffs[n - k] = c
        mk = mk + MatrixR.identity(n) * c
    return PolyQ(coeffs)


def resultant(p: PolyQ, q: PolyQ) -> Fraction:
    """Resultant via the Sylvester matrix determinant."""
    if p.is_zero():
        raise ValueError("resultant requires nonzero first argument")
    dp, dq = p.degree, q.degree
    if q.is_zero():
        return Fraction(0) if dp > 0 else Fraction(1)
    n = dp + dq
    if n == 0:
        return Fraction(1)
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(dq):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in pc] + [Fraction(0)] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in qc] + [Fraction(0)] * (n - dq - 1 - i))
    return det(MatrixR.from_rows(rows), "bareiss")


def det_permutation_expansion(m: MatrixR):
    """Brute-force determinant over all permutations (test oracle, n <= 6)."""
    n = m.rows
    if n > 6:
        raise ValueError("permutation expansion capped at n <= 6")
    acc = None
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = None
        for i in range(n):
            prod = m[i, perm[i]] if prod is None else prod * m[i, perm[i]]
        if prod is None:
            prod = Fraction(1)
        if sign < 0:
            prod = prod * -1
        acc = prod if acc is None else acc + prod
    return acc if acc is not None else Fraction(1)
