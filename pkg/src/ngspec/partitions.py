"""Quotient matrices of the signless Laplacian and the cubics built from them.

A vertex partition is *equitable* for Q(G) when every block-to-block
submatrix has constant row sums; its quotient then shares its largest
eigenvalue with Q(G).  A *dominating* quotient takes, for each block pair, the
largest row sum instead, and its largest eigenvalue bounds q1(G) from above.

Only Q(G) is handled (never L(G)): the domination argument needs nonnegative
entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Graph
from .poly import Polynomial, RootInterval, charpoly, isolate_real_roots, product

QUOTIENT_CAP = 8
ROOT_TOL = Fraction(1, 10**12)


@dataclass(frozen=True)
class Partition:
    block_of: tuple[int, ...]
    m: int

    def __post_init__(self):
        if set(self.block_of) != set(range(self.m)):
            raise ValueError("every block must be nonempty and indexed 0..m-1")

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]]) -> "Partition":
        n = sum(len(b) for b in blocks)
        block_of = [-1] * n
        for i, b in enumerate(blocks):
            for v in b:
                if not 0 <= v < n or block_of[v] != -1:
                    raise ValueError(f"vertex {v} repeated or out of range")
                block_of[v] = i
        return cls(tuple(block_of), len(blocks))

    @property
    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.m)]
        for v, b in enumerate(self.block_of):
            out[b].append(v)
        return out


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[int, ...], ...]
    mode: str  # "exact" or "dominating"

    @property
    def m(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class EquitableViolation:
    vertex: int
    block: int
    row_sum: int
    expected: int


def _block_row_sums(g: Graph, p: Partition) -> list[list[int]]:
    """sums[v][j] = row sum of Q(G) restricted to row v and the columns of block j."""
    if len(p.block_of) != g.n:
        raise ValueError(f"partition covers {len(p.block_of)} vertices, graph has {g.n}")
    deg = g.degrees
    sums = []
    for v in range(g.n):
        row = [0] * p.m
        for u in g.neighbors(v):
            row[p.block_of[u]] += 1
        row[p.block_of[v]] += deg[v]
        sums.append(row)
    return sums


def check_equitable(g: Graph, p: Partition) -> QuotientMatrix | EquitableViolation:
    sums = _block_row_sums(g, p)
    entries: list[list[int | None]] = [[None] * p.m for _ in range(p.m)]
    for v in range(g.n):
        i = p.block_of[v]
        for j in range(p.m):
            if entries[i][j] is None:
                entries[i][j] = sums[v][j]
            elif entries[i][j] != sums[v][j]:
                return EquitableViolation(v, j, sums[v][j], entries[i][j])
    return QuotientMatrix(tuple(tuple(r) for r in entries), "exact")


def dominating_quotient(g: Graph, p: Partition) -> QuotientMatrix:
    sums = _block_row_sums(g, p)
    entries = [[0] * p.m for _ in range(p.m)]
    for v in range(g.n):
        i = p.block_of[v]
        for j in range(p.m):
            entries[i][j] = max(entries[i][j], sums[v][j])
    return QuotientMatrix(tuple(tuple(r) for r in entries), "dominating")


def quotient_max_eig_interval(q: QuotientMatrix | Sequence[Sequence]) -> RootInterval:
    rows = q.entries if isinstance(q, QuotientMatrix) else q
    if len(rows) > QUOTIENT_CAP:
        raise ValueError(f"quotient matrices are capped at {QUOTIENT_CAP} blocks")
    return isolate_real_roots(charpoly(rows), ROOT_TOL)[-1]


def quotient_max_eig(q: QuotientMatrix | Sequence[Sequence]) -> float:
    """Largest real eigenvalue, from the exact characteristic polynomial."""
    return quotient_max_eig_interval(q).mid


# ---- the two cubics -------------------------------------------------------


class ComplexRootsError(ValueError):
    """The cubic has a pair of non-real roots."""


@dataclass(frozen=True)
class Cubic:
    poly: Polynomial
    source: str  # "connectivity" (lower bound on mu_{n-1}) or "radius" (upper bound on mu_1)
    params: tuple[int, int, int, int]

    def __post_init__(self):
        if self.poly.degree != 3 or self.poly.lead != 1:
            raise ValueError("expected a monic cubic")

    def __call__(self, x):
        return self.poly(x)

    @property
    def discriminant(self):
        d, c, b, a = self.poly.coeffs
        return 18 * a * b * c * d - 4 * b**3 * d + b**2 * c**2 - 4 * a * c**3 - 27 * a**2 * d**2


def _check_params(n: int, k: int, t: int, ell: int) -> None:
    if not (2 <= k and 2 * k <= n and 1 <= t <= k and 1 <= ell <= n - k):
        raise ValueError(f"invalid parameters n={n}, k={k}, t={t}, ell={ell}")


def connectivity_cubic(n: int, k: int, t: int, ell: int) -> Cubic:
    """Cubic factor of the 4x4 saturated-bipartite quotient (smallest root = mu_{n-1})."""
    _check_params(n, k, t, ell)
    c2 = -(n + ell + t)
    c1 = k * t + n * k + ell * n - ell * k + 2 * ell * t - k * k
    c0 = -ell * t * n
    return Cubic(Polynomial((c0, c1, c2, 1)), "connectivity", (n, k, t, ell))


def radius_cubic(n: int, k: int, t: int, ell: int) -> Cubic:
    """Cubic factor of the dominating 4x4 quotient (largest root bounds mu_1)."""
    _check_params(n, k, t, ell)
    c2 = 2 - 2 * n
    c1 = n * n + n * k - 2 * n - k * k - ell - t
    c0 = ell * n + n * k * k + 2 * n * k - ell * k + t * k - n * n * k - 2 * k * k
    return Cubic(Polynomial((c0, c1, c2, 1)), "radius", (n, k, t, ell))


def saturated_quotient(n: int, k: int, t: int, ell: int) -> list[list[int]]:
    """Exact Q-quotient for blocks (X0, X1, Y0, Y1) of the saturated bipartite graph."""
    r = n - k
    return [
        [r, 0, ell, r - ell],
        [0, ell, ell, 0],
        [t, k - t, k, 0],
        [t, 0, 0, t],
    ]


def radius_quotient(n: int, k: int, t: int, ell: int) -> list[list[int]]:
    """Dominating Q-quotient for blocks (X0, X1, Y0, Y1) of any bipartite graph
    with those saturation counts."""
    r = n - k
    return [
        [r, 0, ell, r - ell],
        [0, r - 1, ell, r - ell - 1],
        [t, k - t, k, 0],
        [t, k - t - 1, 0, k - 1],
    ]


def isolate_roots(c: Cubic, tol=ROOT_TOL) -> tuple[float, float]:
    """(smallest, largest) real root of a cubic with three real roots."""
    lo, hi = cubic_root_intervals(c, tol)
    return lo.mid, hi.mid


def cubic_root_intervals(c: Cubic, tol=ROOT_TOL) -> tuple[RootInterval, RootInterval]:
    if c.discriminant < 0:
        raise ComplexRootsError(f"cubic {c.poly} has non-real roots")
    roots = isolate_real_roots(c.poly, tol)
    return roots[0], roots[-1]


def saturated_charpoly_formula(n: int, k: int, t: int, ell: int) -> Polynomial:
    """Closed-form det(xI - Q) of the saturated bipartite graph:
    x (x-r)^(t-1) (x-k)^(ell-1) (x-ell)^(k-t-1) (x-t)^(r-ell-1) f(x), r = n-k.

    When t = k or ell = r an exponent is -1; the product is then still a
    polynomial, and the division is carried out exactly.
    """
    _check_params(n, k, t, ell)
    r = n - k
    exps = [(r, t - 1), (k, ell - 1), (ell, k - t - 1), (t, r - ell - 1)]
    X = Polynomial.x()
    num = X * product(Polynomial.linear_root(a) ** e for a, e in exps if e > 0) \
        * connectivity_cubic(n, k, t, ell).poly
    den = product(Polynomial.linear_root(a) ** -e for a, e in exps if e < 0)
    quo, rem = divmod(num, den)
    if not rem.is_zero():
        raise ArithmeticError(f"formula is not a polynomial at ({n},{k},{t},{ell})")
    return quo


# ---- the split-join family ------------------------------------------------


def split_join_q1(n: int, k: int) -> float:
    """Largest signless Laplacian eigenvalue of K_k joined with an independent set of n-k."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    return n / 2 + k - 1 + 0.5 * math.sqrt(n * n + 4 * n * k - 4 * n - 4 * k * k + 4)


def split_join_quotient(n: int, k: int) -> list[list[int]]:
    return [[n + k - 2, n - k], [k, k]]


def split_join_product(n: int, k: int) -> float:
    """q1(H) * q1(complement H); the complement is K_{n-k} plus k isolated vertices."""
    return 2 * (n - k - 1) * split_join_q1(n, k)


hn_q1_closed_form = split_join_q1
