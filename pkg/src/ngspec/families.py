"""Constructors for the graph families used by the bounds.

A family is described by a small tagged value (a frozen dataclass) and built
with :func:`construct`.  :func:`parse_family` reads the ``name:params`` form the
CLI accepts, e.g. ``star:6``, ``kbip:2,3``, ``hn:9`` or ``bip_h:8,3,1,2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import Graph


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    r: int
    s: int


@dataclass(frozen=True)
class Star:
    n: int


@dataclass(frozen=True)
class EmptyGraph:
    n: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Join:
    left: "FamilySpec"
    right: "FamilySpec"


@dataclass(frozen=True)
class DisjointUnion:
    left: "FamilySpec"
    right: "FamilySpec"


@dataclass(frozen=True)
class SaturatedBipartite:
    """Four-block bipartite graph with parts X = X0 + X1, Y = Y0 + Y1.

    X0 (t vertices) is complete to Y, Y0 (ell vertices) is complete to X and
    there are no X1-Y1 edges.  Vertex order: X0, X1, Y0, Y1.
    """

    n: int
    k: int
    t: int
    ell: int

    def __post_init__(self):
        n, k, t, ell = self.n, self.k, self.t, self.ell
        if not (2 <= k and 2 * k <= n and 1 <= t <= k and 1 <= ell <= n - k):
            raise ValueError(f"invalid parameters n={n}, k={k}, t={t}, ell={ell}")


@dataclass(frozen=True)
class SplitJoin:
    """Independent set of size n-k joined to a clique of size k (clique first).

    With ``k=None`` the clique size is the one used by the extremal family:
    n = 6k + s with s in {-3, ..., 2}.
    """

    n: int
    k: int | None = None

    @property
    def clique_size(self) -> int:
        return split_join_k(self.n) if self.k is None else self.k


FamilySpec = Union[
    Complete, CompleteBipartite, Star, EmptyGraph, Path, Cycle, Join, DisjointUnion,
    SaturatedBipartite, SplitJoin,
]


def split_join_k(n: int) -> int:
    """The unique k >= 1 with n = 6k + s, -3 <= s <= 2."""
    if n < 3:
        raise ValueError(f"no k >= 1 with n = 6k + s, -3 <= s <= 2 for n={n}")
    return (n + 3) // 6


def join(a: Graph, b: Graph) -> Graph:
    full_b = ((1 << b.n) - 1) << a.n
    rows = [r | full_b for r in a.rows]
    rows += [(r << a.n) | ((1 << a.n) - 1) for r in b.rows]
    return Graph(a.n + b.n, tuple(rows))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return Graph(a.n + b.n, a.rows + tuple(r << a.n for r in b.rows))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def construct(spec: FamilySpec) -> Graph:
    match spec:
        case Complete(n):
            return complete(n)
        case EmptyGraph(n):
            return Graph.empty(n)
        case CompleteBipartite(r, s):
            return join(Graph.empty(r), Graph.empty(s))
        case Star(n):
            if n < 1:
                raise ValueError("star needs n >= 1")
            return join(Graph.empty(1), Graph.empty(n - 1))
        case Path(n):
            return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
        case Cycle(n):
            if n < 3:
                raise ValueError("cycle needs n >= 3")
            return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
        case Join(left, right):
            return join(construct(left), construct(right))
        case DisjointUnion(left, right):
            return disjoint_union(construct(left), construct(right))
        case SaturatedBipartite(n, k, t, ell):
            x0 = range(t)
            x1 = range(t, k)
            y0 = range(k, k + ell)
            y = range(k, n)
            edges = [(x, yv) for x in x0 for yv in y]
            edges += [(x, yv) for x in x1 for yv in y0]
            return Graph.from_edges(n, edges)
        case SplitJoin(n):
            k = spec.clique_size
            if not 1 <= k < n:
                raise ValueError(f"clique size k={k} must satisfy 1 <= k < n={n}")
            return join(complete(k), Graph.empty(n - k))
    raise TypeError(f"unknown family spec {spec!r}")


_SIMPLE = {
    "complete": Complete,
    "k": Complete,
    "empty": EmptyGraph,
    "star": Star,
    "path": Path,
    "cycle": Cycle,
    "kbip": CompleteBipartite,
    "bip_h": SaturatedBipartite,
    "hn": SplitJoin,
    "split_join": SplitJoin,
}


def parse_family(text: str) -> FamilySpec:
    """Parse ``name:p1,p2,...`` into a family spec."""
    name, _, params = text.partition(":")
    cls = _SIMPLE.get(name.strip().lower())
    if cls is None:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(_SIMPLE)}")
    try:
        args = [int(p) for p in params.split(",") if p.strip()]
        return cls(*args)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name!r}: {params!r}") from exc


def family_name(spec: FamilySpec) -> str:
    for key, cls in _SIMPLE.items():
        if isinstance(spec, cls) and not isinstance(spec, (Join, DisjointUnion)):
            vals = [str(v) for v in vars(spec).values() if v is not None]
            return f"{key}:{','.join(vals)}"
    return repr(spec)
