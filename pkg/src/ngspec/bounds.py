"""Eigenvalue bounds and Nordhaus-Gaddum checks, one predicate per statement.

Every check returns a :class:`BoundReport`.  ``holds`` is decided with a
one-sided tolerance ``eps`` (exactly, when both sides are rational in the
degree data).  ``equality`` needs ``|slack| <= eps`` *and* the structural
equality class named for that bound, decided from adjacency alone.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable

import numpy as np

from .graph import BipStructure, DegreeStats, Graph, bipartition, degree_stats, two_coloring
from .graph6 import write_graph6
from .partitions import Partition, dominating_quotient, quotient_max_eig
from .spectra import DEFAULT_TOL, MatrixKind, spectrum

EPS = 1e-7


class EqualityClass(str, enum.Enum):
    STAR = "Star"
    REGULAR = "Regular"
    BIPARTITE_SEMIREGULAR = "BipartiteSemiregular"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    JOIN_K1_DISCONNECTED = "JoinK1Disconnected"
    SATURATED_VERTEX = "SaturatedVertex"
    OTHER = "Other"
    NOT_APPLICABLE = "NotApplicable"


class Regime(str, enum.Enum):
    THEOREM = "theorem"
    CONJECTURE = "conjecture"
    DISPROVED = "disproved"


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    n: int
    lhs: float
    rhs: float
    holds: bool
    equality: bool
    equality_class: EqualityClass
    graph6: str
    regime: Regime = Regime.THEOREM
    detail: str = ""

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def applicable(self) -> bool:
        return self.equality_class is not EqualityClass.NOT_APPLICABLE

    @property
    def violated(self) -> bool:
        return self.applicable and not self.holds

    def to_json(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "n": self.n,
            "lhs": _num(self.lhs),
            "rhs": _num(self.rhs),
            "slack": _num(self.slack),
            "holds": self.holds,
            "equality": self.equality,
            "equality_class": self.equality_class.value,
            "graph6": self.graph6,
            "regime": self.regime.value,
            "detail": self.detail,
        }


def _num(x: float) -> str:
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    return format(float(x) + 0.0, ".12g")


# ---- shared per-graph data ------------------------------------------------


class GraphData:
    """A graph, its complement and their spectra, computed once and shared.

    Spectra may be injected (descending arrays) when they were already
    computed in bulk.
    """

    def __init__(self, g: Graph, *, lap=None, slap=None, co_lap=None, co_slap=None,
                 tol: float = DEFAULT_TOL):
        self.g = g
        self.n = g.n
        self.tol = tol
        if lap is not None:
            self.lap = np.asarray(lap)
        if slap is not None:
            self.slap = np.asarray(slap)
        if co_lap is not None:
            self.co_lap = np.asarray(co_lap)
        if co_slap is not None:
            self.co_slap = np.asarray(co_slap)

    @classmethod
    def of(cls, g: "Graph | GraphData") -> "GraphData":
        return g if isinstance(g, GraphData) else cls(g)

    @cached_property
    def co(self) -> Graph:
        return self.g.complement()

    @cached_property
    def graph6(self) -> str:
        return write_graph6(self.g)

    @cached_property
    def stats(self) -> DegreeStats:
        return degree_stats(self.g)

    @cached_property
    def bip(self) -> BipStructure | None:
        return bipartition(self.g)

    @cached_property
    def co_bipartite(self) -> bool:
        return two_coloring(self.co) is not None

    def _spec(self, graph, kind):
        return np.array(spectrum(graph, kind, self.tol).values)

    @cached_property
    def lap(self) -> np.ndarray:
        return self._spec(self.g, MatrixKind.LAPLACIAN)

    @cached_property
    def slap(self) -> np.ndarray:
        return self._spec(self.g, MatrixKind.SIGNLESS_LAPLACIAN)

    @cached_property
    def co_lap(self) -> np.ndarray:
        return self._spec(self.co, MatrixKind.LAPLACIAN)

    @cached_property
    def co_slap(self) -> np.ndarray:
        return self._spec(self.co, MatrixKind.SIGNLESS_LAPLACIAN)

    @property
    def mu1(self) -> float:
        return float(self.lap[0])

    @property
    def mu_n1(self) -> float:
        return float(self.lap[self.n - 2])

    @property
    def q1(self) -> float:
        return float(self.slap[0])

    @property
    def co_mu1(self) -> float:
        return float(self.co_lap[0])

    @property
    def co_mu_n1(self) -> float:
        return float(self.co_lap[self.n - 2])

    @property
    def co_q1(self) -> float:
        return float(self.co_slap[0])

    @cached_property
    def star_either(self) -> bool:
        return is_star(self.g) or is_star(self.co)

    @cached_property
    def join_k1_either(self) -> bool:
        return is_join_k1_disconnected(self.g) or is_join_k1_disconnected(self.co)


# ---- structural classes -----------------------------------------------------


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) <= 1


def is_star(g: Graph) -> bool:
    """K_{1,n-1} for n >= 2 (so K_2 counts)."""
    n = g.n
    if n < 2 or g.num_edges != n - 1:
        return False
    deg = sorted(g.degrees)
    return deg[-1] == n - 1 and deg[0] == 1


def is_complete_bipartite(g: Graph) -> bool:
    bip = bipartition(g)
    return bip is not None and bip.k >= 1 and g.num_edges == bip.k * bip.r


def _semiregular_connected(g: Graph, comp) -> bool:
    color = two_coloring(g.induced(comp))
    if color is None:
        return False
    sides: dict[int, set[int]] = {0: set(), 1: set()}
    for i, v in enumerate(comp):
        sides[color[i]].add(g.degree(v))
    return len(sides[0]) <= 1 and len(sides[1]) <= 1


def is_bipartite_semiregular(g: Graph) -> bool:
    """Bipartite, no isolated vertices, and one degree on each side."""
    comps = [c for c in g.components if len(c) > 1]
    if not comps or len(comps) != len(g.components):
        return False
    pairs = set()
    for c in comps:
        if not _semiregular_connected(g, c):
            return False
        v = c[0]
        pairs.add(frozenset({g.degree(v), g.degree(g.neighbors(v)[0])}))
    return len(pairs) == 1


def is_join_k1_disconnected(g: Graph) -> bool:
    """g = K_1 joined with a disconnected graph on n-1 vertices."""
    n = g.n
    if n < 3:
        return False
    for v, d in enumerate(g.degrees):
        if d == n - 1:
            rest = [u for u in range(n) if u != v]
            if not g.induced(rest).is_connected():
                return True
    return False


def equality_classifier(g: Graph) -> frozenset[EqualityClass]:
    """Every named extremal class ``g`` belongs to (``{OTHER}`` if none)."""
    out = set()
    if is_star(g):
        out.add(EqualityClass.STAR)
    if is_regular(g):
        out.add(EqualityClass.REGULAR)
    if is_bipartite_semiregular(g):
        out.add(EqualityClass.BIPARTITE_SEMIREGULAR)
    if is_complete_bipartite(g):
        out.add(EqualityClass.COMPLETE_BIPARTITE)
    if is_join_k1_disconnected(g):
        out.add(EqualityClass.JOIN_K1_DISCONNECTED)
    return frozenset(out or {EqualityClass.OTHER})


# ---- report helpers -----------------------------------------------------------


def _report(bound_id, data: GraphData, lhs, rhs, *, eps, structural=None,
            cls=EqualityClass.OTHER, regime=Regime.THEOREM, strict=False, detail="",
            exact=False) -> BoundReport:
    slack = rhs - lhs
    if exact:
        near = slack == 0
        holds = slack > 0 if strict else slack >= 0
    else:
        slack = float(slack)
        near = abs(slack) <= eps
        holds = slack > eps if strict else slack >= -eps
    equality = near and (structural is None or structural)
    if not equality:
        cls = EqualityClass.OTHER
    return BoundReport(bound_id, data.n, float(lhs), float(rhs), bool(holds), bool(equality),
                       cls, data.graph6, regime, detail)


def _not_applicable(bound_id, data: GraphData, reason: str,
                    regime=Regime.THEOREM) -> BoundReport:
    nan = float("nan")
    return BoundReport(bound_id, data.n, nan, nan, True, False,
                       EqualityClass.NOT_APPLICABLE, data.graph6, regime, reason)


def _ng_regime(data: GraphData) -> Regime:
    return Regime.THEOREM if data.bip is not None or data.co_bipartite else Regime.CONJECTURE


# ---- degree-based bounds on q1 -----------------------------------------------


def _component_extremal(g: Graph, stats: DegreeStats):
    """Max of d(v)+m(v) overall, and the structural class of the first
    regular or semiregular component attaining it (or ``None``)."""
    dm = stats.degree_plus_avg()
    best = max((x for x in dm if x is not None), default=None)
    if best is None:
        return None, None
    for comp in g.components:
        if len(comp) < 2 or max(dm[v] for v in comp) != best:
            continue
        degs = {g.degree(v) for v in comp}
        if len(degs) == 1:
            return best, EqualityClass.REGULAR
        if _semiregular_connected(g, comp):
            return best, EqualityClass.BIPARTITE_SEMIREGULAR
    return best, None


def merris_bound(g, eps: float = EPS) -> BoundReport:
    """q1 <= max_v (d(v) + m(v)); tight on regular and semiregular bipartite
    components attaining the maximum."""
    data = GraphData.of(g)
    if data.stats.edges == 0:
        return _not_applicable("merris", data, "no edges")
    best, cls = _component_extremal(data.g, data.stats)
    return _report("merris", data, data.q1, best, eps=eps, structural=cls is not None,
                   cls=cls or EqualityClass.OTHER)


def das_rhs(n: int, edges: int, max_deg: int, min_deg: int) -> Fraction:
    return (Fraction(2 * edges, n - 1) + Fraction((n - 2) * max_deg, n - 1)
            + (max_deg - min_deg) * (1 - Fraction(max_deg, n - 1)))


def _das_saturated(g: Graph, stats: DegreeStats, v: int) -> bool:
    n, d = g.n, stats.degrees
    if d[v] == n - 1:
        return True
    if d[v] != stats.max_deg:
        return False
    nbrs = set(g.neighbors(v))
    return all(d[u] == stats.max_deg for u in nbrs) and all(
        d[u] == stats.min_deg for u in range(n) if u != v and u not in nbrs)


def _das_structure(data: GraphData) -> bool:
    st = data.stats
    dm = st.degree_plus_avg()
    top = max((x for x in dm if x is not None), default=None)
    return any(dm[v] == top and _das_saturated(data.g, st, v)
               for v in range(data.n) if dm[v] is not None)


def das_bound(g, eps: float = EPS) -> BoundReport:
    """max_v (d(v)+m(v)) <= 2e/(n-1) + (n-2)/(n-1) D + (D-d)(1 - D/(n-1)), exactly."""
    data = GraphData.of(g)
    st = data.stats
    if data.n < 2 or st.edges == 0:
        return _not_applicable("das", data, "needs n >= 2 and an edge")
    dm = st.degree_plus_avg()
    lhs = max(x for x in dm if x is not None)
    rhs = das_rhs(data.n, st.edges, st.max_deg, st.min_deg)
    sat = _das_structure(data)
    cls = (EqualityClass.STAR if is_star(data.g) else
           EqualityClass.REGULAR if is_regular(data.g) else EqualityClass.SATURATED_VERTEX)
    return _report("das", data, lhs, rhs, eps=eps, structural=sat, cls=cls, exact=True)


def dominating_partition(g: Graph) -> Partition:
    """Max-degree vertices versus the rest (one block if regular)."""
    deg = g.degrees
    top = max(deg)
    if min(deg) == top:
        return Partition((0,) * g.n, 1)
    return Partition(tuple(0 if d == top else 1 for d in deg), 2)


def dominating_quotient_bound(g, eps: float = EPS, partition: Partition | None = None) -> BoundReport:
    """q1 <= largest eigenvalue of the row-sum-dominating quotient of Q."""
    data = GraphData.of(g)
    if data.n < 1:
        return _not_applicable("dominating_quotient", data, "empty graph")
    p = partition or dominating_partition(data.g)
    rhs = quotient_max_eig(dominating_quotient(data.g, p))
    return _report("dominating_quotient", data, data.q1, rhs, eps=eps)


# ---- bipartite Laplacian bounds -------------------------------------------------


def bipartite_connectivity_bound(g, eps: float = EPS) -> BoundReport:
    """ell/|Y| <= mu_{n-1} for bipartite g with t >= 1 and ell >= 1; tight only on stars."""
    data = GraphData.of(g)
    bip = data.bip
    if bip is None:
        return _not_applicable("bip_connectivity", data, "not bipartite")
    if bip.t == 0 or bip.ell == 0:
        return _not_applicable("bip_connectivity", data, f"t={bip.t}, ell={bip.ell}")
    lhs = Fraction(bip.ell, bip.r)
    detail = f"k={bip.k},t={bip.t},ell={bip.ell}"
    if not data.g.is_connected():
        detail += ",disconnected"
    return _report("bip_connectivity", data, lhs, data.mu_n1, eps=eps,
                   structural=is_star(data.g) and data.n >= 3, cls=EqualityClass.STAR,
                   detail=detail)


def bipartite_mu1_bound(g, eps: float = EPS) -> tuple[BoundReport, BoundReport]:
    """mu1 <= |Y| + e/|Y| <= n - 1 + ell/|Y|, chained; the chain is tight only on
    complete bipartite graphs."""
    data = GraphData.of(g)
    bip = data.bip
    if bip is None or data.stats.edges == 0:
        reason = "not bipartite" if bip is None else "no edges"
        return (_not_applicable("bip_mu1", data, reason),
                _not_applicable("bip_mu1_chain", data, reason))
    e, r = data.stats.edges, bip.r
    middle = r + Fraction(e, r)
    top = data.n - 1 + Fraction(bip.ell, r)
    complete = e == bip.k * r
    detail = f"k={bip.k},t={bip.t},ell={bip.ell}"
    first = _report("bip_mu1", data, data.mu1, middle, eps=eps, structural=complete,
                    cls=EqualityClass.COMPLETE_BIPARTITE, detail=detail)
    chained = complete and abs(data.mu1 - float(top)) <= eps
    second = _report("bip_mu1_chain", data, middle, top, eps=eps, exact=True,
                     cls=EqualityClass.COMPLETE_BIPARTITE if chained else EqualityClass.OTHER,
                     detail=detail + (",mu1=top" if chained else ""))
    return first, second


def bipartite_case_analysis(g, eps: float = EPS) -> BoundReport:
    """Case split on the saturation counts (t, ell) of a bipartite graph with |X| >= 2.

    * t = 0 or ell = 0: mu1 < n-1.
    * t, ell >= 2: mu_{n-1} > 1 or mu1 <= n-1.
    * ell = 1: mu1 < n-1 if t <= k-2; mu1 < n-1+1/n if t = k-1 < n/2-1;
      both extreme Laplacian eigenvalues in closed form if t = k-1 = n/2-1.
    * t = 1, n >= 7: mu1 < n-1+ell/n.
    """
    data = GraphData.of(g)
    bip = data.bip
    bid = "bip_cases"
    if bip is None:
        return _not_applicable(bid, data, "not bipartite")
    n, k, t, ell = data.n, bip.k, bip.t, bip.ell
    if k < 2:
        return _not_applicable(bid, data, "|X| < 2")
    mu1, mu_n1 = data.mu1, data.mu_n1
    tag = "" if data.g.is_connected() else ",disconnected"
    if t == 0 or ell == 0:
        return _report(bid, data, mu1, n - 1, eps=eps, strict=True, detail="case4" + tag)
    if t >= 2 and ell >= 2:
        if mu1 <= n - 1 + eps:
            return _report(bid, data, mu1, n - 1, eps=eps, detail="case1:mu1<=n-1")
        return _report(bid, data, 1, mu_n1, eps=eps, strict=True, detail="case1:mu_n1>1")
    if ell == 1:
        if t <= k - 2:
            return _report(bid, data, mu1, n - 1, eps=eps, strict=True, detail="case2:t<=k-2")
        if t == k - 1 and 2 * k < n:
            return _report(bid, data, mu1, n - 1 + 1 / n, eps=eps, strict=True,
                           detail="case2:t=k-1<n/2-1")
        if t == k - 1:
            root = math.sqrt(n * n - 4 * n + 8)
            top, bottom = (n + root) / 2, (n - root) / 2
            off = max(abs(mu1 - top), abs(mu_n1 - bottom))
            return BoundReport(bid, n, mu1, top, off <= eps, off <= eps, EqualityClass.OTHER,
                               data.graph6, Regime.THEOREM,
                               f"case2:t=k-1=n/2-1,mu_n1={_num(mu_n1)},closed={_num(bottom)}")
        return _not_applicable(bid, data, f"ell=1,t={t}=k")
    # t == 1, ell >= 2
    if n < 7:
        return _not_applicable(bid, data, "case3 needs n >= 7")
    return _report(bid, data, mu1, n - 1 + ell / n, eps=eps, strict=True, detail="case3")


# ---- Nordhaus-Gaddum checks -------------------------------------------------------


def lap_spread_conjecture(g, eps: float = EPS) -> BoundReport:
    """mu1 - mu_{n-1} <= n-1, with the two equivalent complement forms cross-checked.

    Proved when g or its complement is bipartite, conjectured otherwise.
    """
    data = GraphData.of(g)
    if data.n < 2:
        return _not_applicable("lap_spread", data, "n < 2")
    n = data.n
    spread = data.mu1 - data.mu_n1
    sum_slack = (2 * n - 1) - (data.mu1 + data.co_mu1)
    conn_slack = (data.mu_n1 + data.co_mu_n1) - 1
    spread_slack = (n - 1) - spread
    consistent = (abs(sum_slack - spread_slack) <= 2 * eps
                  and abs(conn_slack - spread_slack) <= 2 * eps)
    detail = "forms consistent" if consistent else (
        f"forms disagree: sum_slack={_num(sum_slack)}, conn_slack={_num(conn_slack)}")
    return _report("lap_spread", data, spread, n - 1, eps=eps, structural=data.join_k1_either,
                   cls=EqualityClass.JOIN_K1_DISCONNECTED, regime=_ng_regime(data), detail=detail)


def mu_product_bound(g, eps: float = EPS) -> BoundReport:
    """mu1(G) mu1(co-G) <= n(n-1).

    Proved when g or its complement is bipartite, conjectured otherwise.  The
    equality class is K_1 joined with a disconnected graph, for g or its
    complement; this strictly contains the stars (e.g. K_{a,b} plus an
    isolated vertex).
    """
    data = GraphData.of(g)
    if data.n < 2:
        return _not_applicable("mu_product", data, "n < 2")
    n = data.n
    cls = EqualityClass.STAR if data.star_either else EqualityClass.JOIN_K1_DISCONNECTED
    return _report("mu_product", data, data.mu1 * data.co_mu1, n * (n - 1), eps=eps,
                   structural=data.join_k1_either, cls=cls, regime=_ng_regime(data))


def q_sum_rhs(n: int, max_deg: int, min_deg: int) -> Fraction:
    x = max_deg - min_deg
    return 2 * n - 2 + x * (2 - Fraction(x + 1, n - 1))


def q_sum_bound(g, eps: float = EPS) -> tuple[BoundReport, BoundReport]:
    """q1(G) + q1(co-G) against the degree-spread bound and against 3n - 4."""
    data = GraphData.of(g)
    if data.n < 2:
        return (_not_applicable("q_sum", data, "n < 2"),
                _not_applicable("q_sum_3n4", data, "n < 2"))
    n = data.n
    lhs = data.q1 + data.co_q1
    reg = is_regular(data.g)
    refined = _report("q_sum", data, lhs, q_sum_rhs(n, data.stats.max_deg, data.stats.min_deg),
                      eps=eps, structural=reg or data.star_either,
                      cls=EqualityClass.REGULAR if reg else EqualityClass.STAR)
    coarse = _report("q_sum_3n4", data, lhs, 3 * n - 4, eps=eps, structural=data.star_either,
                     cls=EqualityClass.STAR)
    return refined, coarse


def q_product_check(g, eps: float = EPS) -> BoundReport:
    """q1(G) q1(co-G) <= 2n(n-2): a disproved conjecture, so violations are findings."""
    data = GraphData.of(g)
    if data.n < 2:
        return _not_applicable("q_product", data, "n < 2", Regime.DISPROVED)
    n = data.n
    return _report("q_product", data, data.q1 * data.co_q1, 2 * n * (n - 2), eps=eps,
                   structural=data.star_either, cls=EqualityClass.STAR, regime=Regime.DISPROVED)


# ---- structural equality predicates ---------------------------------------------

EQUALITY_STRUCTURE: dict[str, Callable[[GraphData], bool]] = {
    "das": _das_structure,
    "merris": lambda d: _component_extremal(d.g, d.stats)[1] is not None,
    "bip_connectivity": lambda d: is_star(d.g) and d.n >= 3,
    "bip_mu1": lambda d: is_complete_bipartite(d.g),
    "lap_spread": lambda d: d.join_k1_either,
    "mu_product": lambda d: d.join_k1_either,
    "q_sum": lambda d: is_regular(d.g) or d.star_either,
    "q_sum_3n4": lambda d: d.star_either,
    "q_product": lambda d: d.star_either,
}


# ---- registry ---------------------------------------------------------------------


@dataclass(frozen=True)
class BoundSpec:
    bound_id: str
    evaluate: Callable[..., BoundReport]
    description: str
    bipartite_only: bool = False
    tags: tuple[str, ...] = field(default=())


BOUNDS: dict[str, BoundSpec] = {
    b.bound_id: b
    for b in [
        BoundSpec("das", das_bound, "max d+m <= degree-spread bound"),
        BoundSpec("merris", merris_bound, "q1 <= max d+m"),
        BoundSpec("dominating_quotient", dominating_quotient_bound,
                  "q1 <= lambda_max(dominating quotient)"),
        BoundSpec("bip_connectivity", bipartite_connectivity_bound, "ell/|Y| <= mu_{n-1}",
                  bipartite_only=True),
        BoundSpec("bip_mu1", lambda g, eps=EPS: bipartite_mu1_bound(g, eps)[0],
                  "mu1 <= |Y| + e/|Y|", bipartite_only=True),
        BoundSpec("bip_mu1_chain", lambda g, eps=EPS: bipartite_mu1_bound(g, eps)[1],
                  "|Y| + e/|Y| <= n-1 + ell/|Y|", bipartite_only=True),
        BoundSpec("bip_cases", bipartite_case_analysis, "saturation case analysis",
                  bipartite_only=True),
        BoundSpec("lap_spread", lap_spread_conjecture, "mu1 - mu_{n-1} <= n-1"),
        BoundSpec("mu_product", mu_product_bound, "mu1 * co-mu1 <= n(n-1)"),
        BoundSpec("q_sum", lambda g, eps=EPS: q_sum_bound(g, eps)[0],
                  "q1 + co-q1 <= degree-spread bound"),
        BoundSpec("q_sum_3n4", lambda g, eps=EPS: q_sum_bound(g, eps)[1], "q1 + co-q1 <= 3n-4"),
        BoundSpec("q_product", q_product_check, "q1 * co-q1 <= 2n(n-2) (disproved)"),
    ]
}


def evaluate(g, bound_ids=None, eps: float = EPS) -> list[BoundReport]:
    data = GraphData.of(g)
    ids = list(BOUNDS) if bound_ids is None else bound_ids
    return [BOUNDS[b].evaluate(data, eps) for b in ids]
