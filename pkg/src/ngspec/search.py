"""Lower bounds on rho(n) = max over n-vertex graphs of q1(G) * q1(co-G).

``ratio_point`` maximises the closed-form product of the split-join family
over the clique size; ``search`` is a seeded hill climb over single edge
flips that also records how it compares with the family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .graph6 import write_graph6
from .partitions import split_join_product

LIMIT = 5 / 18 * (4 + math.sqrt(14))


@dataclass(frozen=True)
class RatioPoint:
    n: int
    best_k: int
    product: float
    ratio: float

    def as_dict(self) -> dict:
        return {"n": self.n, "best_k": self.best_k, "product": self.product,
                "ratio": self.ratio, "limit": LIMIT, "gap": self.ratio - LIMIT}


def ratio_point(n: int) -> RatioPoint:
    if n < 2:
        raise ValueError("ratio needs n >= 2")
    best_k = max(range(1, n), key=lambda k: split_join_product(n, k))
    prod = split_join_product(n, best_k)
    return RatioPoint(n, best_k, prod, prod / (n * n))


def ratio_table(ns) -> list[RatioPoint]:
    return [ratio_point(n) for n in ns]


# ---- hill climbing ---------------------------------------------------------


def _q1(a: np.ndarray) -> float:
    q = np.diag(a.sum(axis=1)) + a
    return float(np.linalg.eigvalsh(q)[-1])


def q_product(a: np.ndarray) -> float:
    n = a.shape[0]
    co = 1 - a - np.eye(n)
    return _q1(a) * _q1(co)


@dataclass
class SearchResult:
    n: int
    seed: int
    iterations: int
    graph: Graph
    product: float
    family_product: float
    family_k: int
    restarts: int
    trajectory: list[float]

    @property
    def ratio(self) -> float:
        return self.product / (self.n * self.n)

    def as_dict(self) -> dict:
        return {
            "n": self.n, "seed": self.seed, "iterations": self.iterations,
            "graph6": write_graph6(self.graph), "product": self.product, "ratio": self.ratio,
            "family_k": self.family_k, "family_product": self.family_product,
            "vs_family": self.product - self.family_product, "restarts": self.restarts,
        }


def _random_adjacency(n: int, rng: np.random.Generator) -> np.ndarray:
    upper = np.triu(rng.integers(0, 2, size=(n, n)), 1)
    return (upper + upper.T).astype(np.float64)


def search(n: int, iterations: int = 20000, seed: int = 0) -> SearchResult:
    """Hill climb on q1(G) q1(co-G), accepting non-worsening single edge flips.

    After ``50 n`` steps without strict improvement the walk restarts from a
    fresh random graph.  Identical seeds give identical trajectories.
    """
    if n < 4:
        raise ValueError("search needs n >= 4")
    rng = np.random.default_rng(seed)
    patience = 50 * n
    iu, ju = np.triu_indices(n, 1)

    cur = _random_adjacency(n, rng)
    cur_val = q_product(cur)
    best, best_val = cur.copy(), cur_val
    stale = restarts = 0
    trajectory = [cur_val]
    for _ in range(iterations):
        if stale >= patience:
            cur = _random_adjacency(n, rng)
            cur_val = q_product(cur)
            stale = 0
            restarts += 1
        p = rng.integers(len(iu))
        i, j = iu[p], ju[p]
        cur[i, j] = cur[j, i] = 1 - cur[i, j]
        val = q_product(cur)
        if val > cur_val + 1e-12:
            cur_val, stale = val, 0
        elif val >= cur_val - 1e-12:
            cur_val = val
            stale += 1
        else:
            cur[i, j] = cur[j, i] = 1 - cur[i, j]
            stale += 1
        if cur_val > best_val + 1e-12:
            best, best_val = cur.copy(), cur_val
        trajectory.append(cur_val)

    fam = ratio_point(n)
    return SearchResult(n, seed, iterations, Graph.from_adjacency(best.astype(int)), best_val,
                        fam.product, fam.best_k, restarts, trajectory)


def exhaustive_max(n: int) -> tuple[float, int]:
    """True rho(n) over every labelled graph, with one maximising edge mask."""
    from .batch import adjacency_stack

    m = n * (n - 1) // 2
    masks = np.arange(1 << m, dtype=np.int64)
    A = adjacency_stack(n, masks).astype(np.float64)
    C = (1 - np.eye(n))[None] - A
    eye = np.eye(n)

    def q1s(M):
        return np.linalg.eigvalsh(M.sum(axis=2)[:, :, None] * eye + M)[:, -1]

    prod = q1s(A) * q1s(C)
    i = int(np.argmax(prod))
    return float(prod[i]), int(masks[i])
