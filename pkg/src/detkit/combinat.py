"""Combinatorial ground sets for the structured determinants: set
partitions and the partition/noncrossing lattices, noncrossing perfect
matchings, permutation statistics, and alternating sign matrices with
the six-vertex statistics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .exactnum import PolyQ, rat


# ---------------------------------------------------------------------------
# set partitions


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, blocks):
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        seen = [x for b in canon for x in b]
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError("blocks must partition {1..n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def is_noncrossing(self) -> bool:
        for bi in range(len(self.blocks)):
            for bj in range(bi + 1, len(self.blocks)):
                for i in self.blocks[bi]:
                    for k in self.blocks[bi]:
                        if i >= k:
                            continue
                        for j in self.blocks[bj]:
                            for l in self.blocks[bj]:
                                if i < j < k < l:
                                    return False
        return True

    def refines(self, other: "SetPartition") -> bool:
        """True if every block of self is contained in a block of other."""
        return all(set(b) <= set(other.block_of(b[0])) for b in self.blocks)

    def __str__(self):
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def _all_partitions(n: int):
    if n == 0:
        yield []
        return
    for rest in _all_partitions(n - 1):
        yield rest + [[n]]
        for i in range(len(rest)):
            yield rest[:i] + [rest[i] + [n]] + rest[i + 1 :]


@lru_cache(maxsize=None)
def enumerate_partitions(n: int, noncrossing_only: bool = False) -> tuple[SetPartition, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    if noncrossing_only:
        if n > 10:
            raise ValueError("noncrossing enumeration capped at n <= 10")
    elif n > 8:
        raise ValueError("full enumeration capped at n <= 8")
    out = [SetPartition(n, blocks) for blocks in _all_partitions(n)]
    if noncrossing_only:
        out = [p for p in out if p.is_noncrossing()]
    return tuple(sorted(out, key=lambda p: p.blocks))


def partition_meet(p: SetPartition, g: SetPartition) -> SetPartition:
    if p.n != g.n:
        raise ValueError("size mismatch")
    blocks = []
    for a in p.blocks:
        for b in g.blocks:
            inter = set(a) & set(b)
            if inter:
                blocks.append(inter)
    return SetPartition(p.n, blocks)


def partition_join(p: SetPartition, g: SetPartition, lattice: str = "full") -> SetPartition:
    if p.n != g.n:
        raise ValueError("size mismatch")
    if lattice == "full":
        parent = list(range(p.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for part in (p, g):
            for block in part.blocks:
                for x in block[1:]:
                    union(block[0], x)
        groups: dict[int, list[int]] = {}
        for x in range(1, p.n + 1):
            groups.setdefault(find(x), []).append(x)
        return SetPartition(p.n, groups.values())
    if lattice == "noncrossing":
        if not (p.is_noncrossing() and g.is_noncrossing()):
            raise ValueError("noncrossing join requires noncrossing inputs")
        above = [
            c
            for c in enumerate_partitions(p.n, True)
            if p.refines(c) and g.refines(c)
        ]
        # the minimum of `above` in refinement order
        for c in above:
            if all(c.refines(d) for d in above):
                return c
        raise AssertionError("noncrossing join not found")
    raise ValueError(f"unknown lattice {lattice!r}")


# ---------------------------------------------------------------------------
# posets and characteristic polynomials


@dataclass(frozen=True)
class PosetData:
    elements: tuple
    leq: tuple[tuple[bool, ...], ...]  # leq[i][j] == elements[i] <= elements[j]
    rank: tuple[int, ...]

    def minimum(self) -> int:
        for i in range(len(self.elements)):
            if all(self.leq[i][j] for j in range(len(self.elements))):
                return i
        raise ValueError("poset has no minimum")

    def height(self) -> int:
        return max(self.rank)

    def mobius_from(self, zero: int) -> list[Fraction]:
        """mu(zero, p) for all p, by the recursive defining sum."""
        n = len(self.elements)
        order = sorted(range(n), key=lambda i: self.rank[i])
        mu = [Fraction(0)] * n
        for p in order:
            if not self.leq[zero][p]:
                continue
            if p == zero:
                mu[p] = Fraction(1)
                continue
            mu[p] = -sum(
                (mu[x] for x in range(n) if self.leq[zero][x] and self.leq[x][p] and x != p),
                Fraction(0),
            )
        return mu


def poset_char_poly(p: PosetData) -> PolyQ:
    """chi_P(q) = sum_p mu(0,p) q^(h - rank(p))."""
    zero = p.minimum()
    mu = p.mobius_from(zero)
    h = p.height()
    coeffs = [Fraction(0)] * (h + 1)
    for i in range(len(p.elements)):
        if p.leq[zero][i]:
            coeffs[h - p.rank[i]] += mu[i]
    return PolyQ(coeffs)


def reciprocal_poly(f: PolyQ, degree: int = None) -> PolyQ:
    """q^degree * f(1/q); degree defaults to deg f."""
    if degree is None:
        degree = f.degree
    return PolyQ([f.coeff(degree - i) for i in range(degree + 1)])


def _lattice_from_partitions(parts: tuple[SetPartition, ...]) -> PosetData:
    n = parts[0].n
    leq = tuple(
        tuple(a.refines(b) for b in parts) for a in parts
    )
    rank = tuple(n - p.num_blocks for p in parts)
    return PosetData(parts, leq, rank)


@lru_cache(maxsize=None)
def partition_lattice(n: int) -> PosetData:
    """The full partition lattice, ordered by refinement."""
    return _lattice_from_partitions(enumerate_partitions(n, False))


@lru_cache(maxsize=None)
def nc_lattice(n: int) -> PosetData:
    """The noncrossing partition lattice, with the induced refinement order."""
    return _lattice_from_partitions(enumerate_partitions(n, True))


# ---------------------------------------------------------------------------
# noncrossing perfect matchings


def nc_matchings(n2: int) -> tuple[SetPartition, ...]:
    if n2 % 2:
        raise ValueError("nc_matchings requires an even ground set")
    if n2 > 12:
        raise ValueError("capped at 12 points")
    return tuple(
        p
        for p in enumerate_partitions(n2, True)
        if all(len(b) == 2 for b in p.blocks)
    )


def components(a: SetPartition, b: SetPartition) -> int:
    """Number of connected components of the union of two matchings:
    the block count of their join in the full partition lattice."""
    return partition_join(a, b, "full").num_blocks


# ---------------------------------------------------------------------------
# permutations


def perm_stat(s: tuple[int, ...], kind: str) -> int:
    n = len(s)
    if sorted(s) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..n")
    if kind == "inv":
        return sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])
    if kind == "des":
        return sum(1 for i in range(n - 1) if s[i] > s[i + 1])
    if kind == "maj":
        return sum(i + 1 for i in range(n - 1) if s[i] > s[i + 1])
    raise ValueError(f"unknown statistic {kind!r}")


def perm_compose(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    """(s o t)(i) = s(t(i))."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def perm_invert(s: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(s)
    for i, v in enumerate(s):
        out[v - 1] = i + 1
    return tuple(out)


def all_perms(n: int) -> list[tuple[int, ...]]:
    return [tuple(p) for p in permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# alternating sign matrices


@dataclass(frozen=True)
class ASM:
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def num_neg(self) -> int:
        return sum(1 for row in self.entries for e in row if e == -1)

    def row_neg(self, i: int) -> int:
        """Number of (-1)s in row i (1-based)."""
        return sum(1 for e in self.entries[i - 1] if e == -1)

    def col_neg(self, j: int) -> int:
        """Number of (-1)s in column j (1-based)."""
        return sum(1 for row in self.entries if row[j - 1] == -1)

    def zero_site_factor(self, i: int, j: int, X, Y, q) -> Fraction:
        """Weight of a zero entry at (i,j), 1-based, fixed by the row and
        column partial sums there: unequal sums give (q X_i - Y_j), equal
        sums give (X_i - Y_j), with an extra factor q when both sums are 1."""
        rsum = sum(self.entries[i - 1][k] for k in range(j))
        csum = sum(self.entries[k][j - 1] for k in range(i))
        x, y, q = rat(X[i - 1]), rat(Y[j - 1]), rat(q)
        if rsum != csum:
            return q * x - y
        if rsum == 0:
            return x - y
        return q * (x - y)

    def six_vertex_weight(self, X, Y, q) -> Fraction:
        """The summand (1-q)^{2N} prod X_i^{N_i} Y_i^{N^i} times the
        product of zero-site factors."""
        n = self.n
        q = rat(q)
        w = (1 - q) ** (2 * self.num_neg())
        for i in range(1, n + 1):
            w *= rat(X[i - 1]) ** self.row_neg(i)
            w *= rat(Y[i - 1]) ** self.col_neg(i)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if self.entries[i - 1][j - 1] == 0:
                    w *= self.zero_site_factor(i, j, X, Y, q)
        return w


@lru_cache(maxsize=None)
def asm_enumerate(n: int) -> tuple[ASM, ...]:
    """All n x n alternating sign matrices, via 0/1 partial-sum profiles."""
    if not (1 <= n <= 5):
        raise ValueError("asm_enumerate capped at n <= 5")

    def profiles(prev: tuple[int, ...], ones: int):
        """0/1 vectors s with sum(s) = ones and 0 <= prefix(s)-prefix(prev) <= 1."""
        out = []

        def rec(pos, acc, diff, remaining):
            if pos == n:
                if remaining == 0:
                    out.append(tuple(acc))
                return
            for bit in (0, 1):
                if bit > remaining:
                    continue
                nd = diff + bit - prev[pos]
                if 0 <= nd <= 1:
                    acc.append(bit)
                    rec(pos + 1, acc, nd, remaining - bit)
                    acc.pop()

        rec(0, [], 0, ones)
        return out

    results: list[ASM] = []

    def build(i, prev, rows):
        if i == n:
            results.append(ASM(tuple(rows)))
            return
        for s in profiles(prev, i + 1):
            rows.append(tuple(s[k] - prev[k] for k in range(n)))
            build(i + 1, s, rows)
            rows.pop()

    build(0, tuple([0] * n), [])
    return tuple(results)
