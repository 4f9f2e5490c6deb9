"""Vectorised screening of every labelled graph in an edge-mask range.

Stacks of adjacency matrices go through ``numpy.linalg.eigvalsh`` in bulk and
each bound is evaluated with array arithmetic.  A graph is *certified* for a
bound when it is applicable, holds with slack above ``eps`` and therefore
cannot be an equality case; everything else is a *candidate* that the scan
re-evaluates with the per-graph code in :mod:`ngspec.bounds`, reusing the
eigenvalues computed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import EPS, GraphData
from .graph import Graph, pair_order


def adjacency_stack(n: int, masks: np.ndarray) -> np.ndarray:
    masks = np.asarray(masks, dtype=np.int64)
    pairs = pair_order(n)
    A = np.zeros((len(masks), n, n), dtype=np.int8)
    if pairs:
        us = np.array([u for u, _ in pairs])
        vs = np.array([v for _, v in pairs])
        bits = ((masks[:, None] >> np.arange(len(pairs))) & 1).astype(np.int8)
        A[:, us, vs] = bits
        A[:, vs, us] = bits
    return A


def odd_cycle_free(A: np.ndarray) -> np.ndarray:
    """Bipartiteness per graph: no closed walk of odd length <= n."""
    N, n, _ = A.shape
    ok = np.ones(N, dtype=bool)
    if n < 3:
        return ok
    M = A.astype(np.float64)
    sq = M @ M
    power = M
    for _ in range(3, n + 1, 2):
        power = power @ sq
        ok &= np.trace(power, axis1=1, axis2=2) == 0
    return ok


def _desc_eig(mats: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(mats.astype(np.float64))[:, ::-1]


def _star_masks(n: int) -> set[int]:
    pairs = {p: i for i, p in enumerate(pair_order(n))}
    out = set()
    for c in range(n):
        mask = 0
        for v in range(n):
            if v != c:
                mask |= 1 << pairs[(min(c, v), max(c, v))]
        out.add(mask)
    return out


@dataclass
class Screen:
    n: int
    masks: np.ndarray
    degrees: np.ndarray
    lap: np.ndarray
    slap: np.ndarray
    co_lap: np.ndarray
    co_slap: np.ndarray
    bipartite: np.ndarray
    co_bipartite: np.ndarray
    lhs: dict[str, np.ndarray] = field(default_factory=dict)
    rhs: dict[str, np.ndarray] = field(default_factory=dict)
    candidate: dict[str, np.ndarray] = field(default_factory=dict)

    def __len__(self):
        return len(self.masks)

    def graph(self, i: int) -> Graph:
        return Graph.from_edge_mask(self.n, int(self.masks[i]))

    def data(self, i: int) -> GraphData:
        return GraphData(self.graph(i), lap=self.lap[i], slap=self.slap[i],
                         co_lap=self.co_lap[i], co_slap=self.co_slap[i])


def screen(n: int, start: int, stop: int, bound_ids, eps: float = EPS) -> Screen:
    masks = np.arange(start, stop, dtype=np.int64)
    A = adjacency_stack(n, masks)
    full = np.ones((n, n), dtype=np.int8) - np.eye(n, dtype=np.int8)
    C = full[None] - A
    deg = A.sum(axis=2, dtype=np.int64)
    co_deg = (n - 1) - deg
    eye = np.eye(n, dtype=np.int8)
    D = deg[:, :, None] * eye
    coD = co_deg[:, :, None] * eye
    s = Screen(
        n=n, masks=masks, degrees=deg,
        lap=_desc_eig(D - A), slap=_desc_eig(D + A),
        co_lap=_desc_eig(coD - C), co_slap=_desc_eig(coD + C),
        bipartite=odd_cycle_free(A), co_bipartite=odd_cycle_free(C),
    )
    N = len(masks)
    every = np.ones(N, dtype=bool)
    if n < 2:
        for b in bound_ids:
            s.candidate[b] = every
        return s

    edges = deg.sum(axis=1) // 2
    max_deg = deg.max(axis=1)
    min_deg = deg.min(axis=1)
    nbr_sum = np.einsum("kij,kj->ki", A.astype(np.int64), deg)
    safe_d = np.where(deg > 0, deg, 1)
    dm = np.where(deg > 0, (deg * deg + nbr_sum) / safe_d, -np.inf)
    dm_max = dm.max(axis=1)
    mu1, mu_n1, q1 = s.lap[:, 0], s.lap[:, n - 2], s.slap[:, 0]
    co_mu1, co_q1 = s.co_lap[:, 0], s.co_slap[:, 0]

    def near_or_worse(b, lhs, rhs, mask=None):
        s.lhs[b], s.rhs[b] = lhs, rhs
        cand = (rhs - lhs) <= eps
        s.candidate[b] = cand if mask is None else cand | mask

    no_edges = edges == 0
    for b in bound_ids:
        if b == "das":
            # exact: (d^2 + S)(n-1) vs d * (2e + (n-2)D + (D-d)(n-1-D)), per vertex
            num = 2 * edges + (n - 2) * max_deg + (max_deg - min_deg) * (n - 1 - max_deg)
            left = (deg * deg + nbr_sum) * (n - 1)
            right = deg * num[:, None]
            touch = ((left >= right) & (deg > 0)).any(axis=1)
            s.lhs[b], s.rhs[b] = dm_max, num / (n - 1)
            s.candidate[b] = touch | no_edges
        elif b == "merris":
            near_or_worse(b, q1, dm_max, no_edges)
        elif b == "dominating_quotient":
            near_or_worse(b, q1, _dominating_2block(A, deg))
        elif b in ("bip_connectivity", "bip_mu1", "bip_mu1_chain", "bip_cases"):
            s.candidate[b] = s.bipartite.copy()
        elif b == "lap_spread":
            near_or_worse(b, mu1 - mu_n1, np.full(N, n - 1.0))
        elif b == "mu_product":
            near_or_worse(b, mu1 * co_mu1, np.full(N, float(n * (n - 1))))
        elif b == "q_sum":
            x = (max_deg - min_deg).astype(float)
            near_or_worse(b, q1 + co_q1, 2 * n - 2 + x * (2 - (x + 1) / (n - 1)))
        elif b == "q_sum_3n4":
            near_or_worse(b, q1 + co_q1, np.full(N, 3.0 * n - 4))
        elif b == "q_product":
            near_or_worse(b, q1 * co_q1, np.full(N, 2.0 * n * (n - 2)))
        else:
            raise KeyError(f"unknown bound id {b!r}")
    return s


def _dominating_2block(A: np.ndarray, deg: np.ndarray) -> np.ndarray:
    """Largest eigenvalue of the dominating quotient for blocks
    (max-degree vertices, rest); a single block for regular graphs."""
    top = deg.max(axis=1, keepdims=True)
    in0 = deg == top
    Ai = A.astype(np.int64)
    to0 = np.einsum("kij,kj->ki", Ai, in0.astype(np.int64)) + deg * in0
    to1 = np.einsum("kij,kj->ki", Ai, (~in0).astype(np.int64)) + deg * ~in0

    def blockmax(vals, rows):
        return np.where(rows, vals, 0).max(axis=1).astype(float)

    a, b = blockmax(to0, in0), blockmax(to1, in0)
    c, d = blockmax(to0, ~in0), blockmax(to1, ~in0)
    lam = (a + d) / 2 + np.sqrt(((a - d) / 2) ** 2 + b * c)
    regular = ~(~in0).any(axis=1)
    return np.where(regular, 2.0 * top[:, 0], lam)


def star_or_costar_masks(n: int) -> set[int]:
    """Edge masks of every labelled star K_{1,n-1} and of its complement."""
    full = (1 << (n * (n - 1) // 2)) - 1
    stars = _star_masks(n) if n >= 2 else set()
    return stars | {full ^ m for m in stars}
