"""Simple undirected graphs stored as packed bit rows.

Vertices are the integers ``0..n-1``.  Row ``v`` of the adjacency relation is a
Python int whose bit ``u`` is set iff ``uv`` is an edge.  Graphs are immutable
values; every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

ENUMERATION_CAP = 8


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError(f"need {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise ValueError(f"row {v} has a self-loop or out-of-range bit")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
                r ^= low

    # ---- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_adjacency(cls, a) -> "Graph":
        a = np.asarray(a)
        n = a.shape[0]
        rows = tuple(sum(1 << u for u in range(n) if a[v, u]) for v in range(n))
        return cls(n, rows)

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Graph whose edges are the set bits of ``mask`` in :func:`pair_order`."""
        rows = [0] * n
        for i, (u, v) in enumerate(pair_order(n)):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # ---- queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @cached_property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.rows[u] >> (u + 1)):
                yield u, u + 1 + v

    def edge_mask(self) -> int:
        mask = 0
        for i, (u, v) in enumerate(pair_order(self.n)):
            if self.rows[u] >> v & 1:
                mask |= 1 << i
        return mask

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(tuple(_bits(comp)))
        return tuple(out)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    # ---- derived graphs -----------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) cannot be added")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(
            len(vs),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def __str__(self) -> str:
        from .graph6 import write_graph6

        return write_graph6(self)


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(u, v) for v in range(1, n) for u in range(v)]


# ---- degree statistics ------------------------------------------------


@dataclass(frozen=True)
class DegreeStats:
    degrees: tuple[int, ...]
    max_deg: int
    min_deg: int
    edges: int
    neighbor_degree_sums: tuple[int, ...]

    @property
    def avg_neighbor_deg(self) -> tuple[Fraction | None, ...]:
        """m(v) as exact rationals; ``None`` for isolated vertices."""
        return tuple(
            Fraction(s, d) if d else None
            for d, s in zip(self.degrees, self.neighbor_degree_sums)
        )

    def degree_plus_avg(self) -> tuple[Fraction | None, ...]:
        return tuple(
            Fraction(d * d + s, d) if d else None
            for d, s in zip(self.degrees, self.neighbor_degree_sums)
        )


def degree_stats(g: Graph) -> DegreeStats:
    deg = g.degrees
    sums = tuple(sum(deg[u] for u in _bits(r)) for r in g.rows)
    return DegreeStats(
        degrees=deg,
        max_deg=max(deg, default=0),
        min_deg=min(deg, default=0),
        edges=g.num_edges,
        neighbor_degree_sums=sums,
    )


# ---- bipartite structure ----------------------------------------------


@dataclass(frozen=True)
class BipStructure:
    """A bipartition (X, Y) with |X| <= |Y| and its saturation counts.

    ``x_full`` holds the vertices of X adjacent to all of Y and ``y_full`` the
    vertices of Y adjacent to all of X; ``t`` and ``ell`` are their sizes.
    """

    X: tuple[int, ...]
    Y: tuple[int, ...]
    x_full: tuple[int, ...]
    y_full: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.X)

    @property
    def r(self) -> int:
        return len(self.Y)

    @property
    def t(self) -> int:
        return len(self.x_full)

    @property
    def ell(self) -> int:
        return len(self.y_full)

    @property
    def n(self) -> int:
        return len(self.X) + len(self.Y)


def two_coloring(g: Graph) -> list[int] | None:
    """BFS 2-coloring (color 0 holds each component's smallest vertex)."""
    color = [-1] * g.n
    for comp in g.components:
        s = comp[0]
        color[s] = 0
        queue = [s]
        for v in queue:
            for u in _bits(g.rows[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def bipartition(g: Graph) -> BipStructure | None:
    """Bipartition with |Y| >= |X|, or ``None`` if ``g`` has an odd cycle.

    Each component with edges puts its smaller color class in X; a balanced
    component puts the class holding its smallest vertex in X.  Isolated
    vertices go to Y.
    """
    color = two_coloring(g)
    if color is None:
        return None
    X: list[int] = []
    Y: list[int] = []
    for comp in g.components:
        if len(comp) == 1:
            Y.append(comp[0])
            continue
        side0 = [v for v in comp if color[v] == 0]
        side1 = [v for v in comp if color[v] == 1]
        if len(side1) < len(side0):
            side0, side1 = side1, side0
        X.extend(side0)
        Y.extend(side1)
    X.sort()
    Y.sort()
    deg = g.degrees
    x_full = tuple(v for v in X if deg[v] == len(Y))
    y_full = tuple(v for v in Y if deg[v] == len(X))
    return BipStructure(tuple(X), tuple(Y), x_full, y_full)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


# ---- enumeration --------------------------------------------------------


def enumerate_labelled(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """All labelled simple graphs on ``n`` vertices in edge-mask order.

    ``start``/``stop`` select a subrange of mask indices so disjoint ranges
    can be produced independently.
    """
    if n > ENUMERATION_CAP:
        raise ValueError(f"exhaustive enumeration is capped at n={ENUMERATION_CAP}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    pairs = pair_order(n)
    for mask in range(start, stop):
        rows = [0] * n
        m = mask
        i = 0
        while m:
            if m & 1:
                u, v = pairs[i]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
            i += 1
        yield Graph(n, tuple(rows))


def count_labelled(n: int) -> int:
    return 1 << (n * (n - 1) // 2)
