"""Bound scans over exhaustive ranges, graph6 files and constructed families.

Exhaustive sources are split into edge-mask chunks, screened in bulk by
:mod:`ngspec.batch`, and only the graphs the screen cannot certify are
re-evaluated one at a time.  Chunks are merged in source order, so output is
identical for any number of workers.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator

from . import batch
from .bounds import BOUNDS, EPS, BoundReport, GraphData, Regime
from .families import construct, parse_family
from .graph import ENUMERATION_CAP, Graph, count_labelled
from .graph6 import read_graph6_file

EMIT_MODES = ("violations", "equalities", "all")


@dataclass
class ScanConfig:
    source: str  # "exhaustive", "file" or "family"
    bound_ids: list[str]
    n: int | None = None
    path: str | None = None
    family: str | None = None
    jobs: int = 1
    epsilon: float = EPS
    emit: str | Callable[[BoundReport], bool] = "violations"
    chunk_size: int = 1 << 15

    def __post_init__(self):
        if not self.bound_ids:
            raise ValueError("at least one bound id is required")
        unknown = [b for b in self.bound_ids if b not in BOUNDS]
        if unknown:
            raise ValueError(f"unknown bound ids {unknown}; choose from {list(BOUNDS)}")
        if self.source == "exhaustive":
            if self.n is None or not 0 <= self.n <= ENUMERATION_CAP:
                raise ValueError(f"exhaustive scans need 0 <= n <= {ENUMERATION_CAP}")
        elif self.source == "file":
            if not self.path:
                raise ValueError("file scans need a path")
        elif self.source == "family":
            if not self.family:
                raise ValueError("family scans need a family spec")
        else:
            raise ValueError(f"unknown source {self.source!r}")
        if isinstance(self.emit, str) and self.emit not in EMIT_MODES:
            raise ValueError(f"emit must be one of {EMIT_MODES}")


@dataclass
class BoundSummary:
    checked: int = 0
    held: int = 0
    equality: int = 0
    violated: int = 0
    not_applicable: int = 0
    violated_by_regime: Counter = field(default_factory=Counter)

    def add(self, r: BoundReport) -> None:
        self.checked += 1
        if not r.applicable:
            self.not_applicable += 1
        elif r.holds:
            self.held += 1
        else:
            self.violated += 1
            self.violated_by_regime[r.regime.value] += 1
        if r.equality:
            self.equality += 1

    def merge(self, other: "BoundSummary") -> None:
        self.checked += other.checked
        self.held += other.held
        self.equality += other.equality
        self.violated += other.violated
        self.not_applicable += other.not_applicable
        self.violated_by_regime.update(other.violated_by_regime)

    def as_dict(self) -> dict:
        return {
            "checked": self.checked, "held": self.held, "equality": self.equality,
            "violated": self.violated, "not_applicable": self.not_applicable,
            "violated_by_regime": dict(sorted(self.violated_by_regime.items())),
        }


@dataclass
class ScanSummary:
    bounds: dict[str, BoundSummary]

    @property
    def proved_violations(self) -> int:
        return sum(s.violated_by_regime[Regime.THEOREM.value] for s in self.bounds.values())

    @property
    def exit_code(self) -> int:
        return 1 if self.proved_violations else 0

    def merge(self, other: "ScanSummary") -> None:
        for b, s in other.bounds.items():
            self.bounds.setdefault(b, BoundSummary()).merge(s)


def _emit_predicate(emit) -> Callable[[BoundReport], bool]:
    if callable(emit):
        return emit
    if emit == "violations":
        return lambda r: r.violated
    if emit == "equalities":
        return lambda r: r.equality
    return lambda r: True


def _empty_summary(bound_ids) -> ScanSummary:
    return ScanSummary({b: BoundSummary() for b in bound_ids})


# ---- per-chunk workers ----------------------------------------------------------


def _exhaustive_chunk(args):
    n, start, stop, bound_ids, eps, emit = args
    keep = _emit_predicate(emit)
    emit_all = emit == "all"
    s = batch.screen(n, start, stop, bound_ids, eps)
    summary = _empty_summary(bound_ids)
    out: list[BoundReport] = []
    bip_only = {b for b in bound_ids if BOUNDS[b].bipartite_only}
    for i in range(len(s)):
        data = None
        for b in bound_ids:
            if not (emit_all or s.candidate[b][i]):
                # certified by the screen: holds strictly, or is out of scope
                bs = summary.bounds[b]
                bs.checked += 1
                if b in bip_only and not s.bipartite[i]:
                    bs.not_applicable += 1
                else:
                    bs.held += 1
                continue
            if data is None:
                data = s.data(i)
            r = BOUNDS[b].evaluate(data, eps)
            summary.bounds[b].add(r)
            if keep(r):
                out.append(r)
    return out, summary


def _graph_chunk(args):
    graphs, bound_ids, eps, emit = args
    keep = _emit_predicate(emit)
    summary = _empty_summary(bound_ids)
    out = []
    for g in graphs:
        data = GraphData(g)
        for b in bound_ids:
            r = BOUNDS[b].evaluate(data, eps)
            summary.bounds[b].add(r)
            if keep(r):
                out.append(r)
    return out, summary


# ---- sources ---------------------------------------------------------------------


_RANGE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def family_graphs(text: str) -> Iterator[Graph]:
    """Graphs of ``name:params`` where at most one parameter is a range ``a..b``."""
    name, _, params = text.partition(":")
    parts = [p.strip() for p in params.split(",")] if params else []
    ranged = [i for i, p in enumerate(parts) if _RANGE.match(p)]
    if len(ranged) > 1:
        raise ValueError("only one family parameter may be a range")
    if not ranged:
        yield construct(parse_family(text))
        return
    i = ranged[0]
    lo, hi = map(int, _RANGE.match(parts[i]).groups())
    for val in range(lo, hi + 1):
        spec_parts = parts[:i] + [str(val)] + parts[i + 1:]
        yield construct(parse_family(f"{name}:{','.join(spec_parts)}"))


def _chunks(items: Iterable, size: int) -> Iterator[list]:
    buf = []
    for x in items:
        buf.append(x)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def _tasks(cfg: ScanConfig):
    emit = cfg.emit
    if cfg.source == "exhaustive":
        total = count_labelled(cfg.n)
        return _exhaustive_chunk, (
            (cfg.n, a, min(a + cfg.chunk_size, total), cfg.bound_ids, cfg.epsilon, emit)
            for a in range(0, total, cfg.chunk_size))
    graphs = read_graph6_file(cfg.path) if cfg.source == "file" else family_graphs(cfg.family)
    size = max(1, min(cfg.chunk_size, 256))
    return _graph_chunk, ((chunk, cfg.bound_ids, cfg.epsilon, emit) for chunk in _chunks(graphs, size))


def iter_scan(cfg: ScanConfig) -> Iterator[tuple[list[BoundReport], ScanSummary]]:
    """Yield (emitted reports, partial summary) per chunk, in source order."""
    worker, tasks = _tasks(cfg)
    if cfg.jobs > 1 and callable(cfg.emit) and cfg.emit.__name__ == "<lambda>":
        raise ValueError("lambda emit filters cannot be sent to worker processes")
    if cfg.jobs <= 1:
        for t in tasks:
            yield worker(t)
        return
    with Pool(cfg.jobs) as pool:
        yield from pool.imap(worker, tasks)


def run_scan(cfg: ScanConfig, sink: Callable[[BoundReport], None] | None = None) -> ScanSummary:
    summary = _empty_summary(cfg.bound_ids)
    for reports, part in iter_scan(cfg):
        summary.merge(part)
        if sink is not None:
            for r in reports:
                sink(r)
    return summary
