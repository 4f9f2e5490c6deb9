"""Command line front end: ``ngspec spectrum|construct|scan|ratio|search``.

Exit codes: 0 success, 1 a proved bound was violated, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .bounds import BOUNDS, EPS
from .families import construct, parse_family
from .graph import Graph
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .scan import EMIT_MODES, ScanConfig, run_scan
from .search import LIMIT, ratio_table, search
from .spectra import MatrixKind, spectrum

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _read_graph(text: str) -> Graph:
    """A graph6 string, or a family spec such as ``star:6``."""
    if ":" in text:
        return construct(parse_family(text))
    return parse_graph6(text)


def _fmt(x: float) -> str:
    return format(x + 0.0, ".10g")


# ---- subcommands -------------------------------------------------------------


def _spectrum_report(g: Graph) -> dict:
    n = g.n
    co = g.complement()
    lap = spectrum(g, MatrixKind.LAPLACIAN).values
    slap = spectrum(g, MatrixKind.SIGNLESS_LAPLACIAN).values
    co_lap = spectrum(co, MatrixKind.LAPLACIAN).values
    co_slap = spectrum(co, MatrixKind.SIGNLESS_LAPLACIAN).values
    out = {"graph6": write_graph6(g), "n": n, "edges": g.num_edges,
           "laplacian": list(lap), "signless_laplacian": list(slap)}
    if n >= 2:
        out.update(mu1=lap[0], mu_n1=lap[n - 2], q1=slap[0], spread=lap[0] - lap[n - 2],
                   co_mu1=co_lap[0], co_mu_n1=co_lap[n - 2], co_q1=co_slap[0])
    return out


def cmd_spectrum(args) -> int:
    g = _read_graph(args.graph)
    rep = _spectrum_report(g)
    with _open_out(args.output) as out:
        if args.format == "json":
            print(json.dumps(rep), file=out)
        else:
            for key, val in rep.items():
                if isinstance(val, list):
                    val = " ".join(_fmt(v) for v in val)
                elif isinstance(val, float):
                    val = _fmt(val)
                print(f"{key:>20}: {val}", file=out)
    return EXIT_OK


def cmd_construct(args) -> int:
    g = construct(parse_family(args.family))
    with _open_out(args.output) as out:
        if args.format == "json":
            print(json.dumps({"family": args.family, "n": g.n, "edges": g.num_edges,
                              "graph6": write_graph6(g)}), file=out)
        else:
            print(write_graph6(g), file=out)
    return EXIT_OK


def _bound_ids(text: str) -> list[str]:
    if text == "all":
        return list(BOUNDS)
    ids = [b.strip() for b in text.split(",") if b.strip()]
    unknown = [b for b in ids if b not in BOUNDS]
    if unknown:
        raise UsageError(f"unknown bound ids {unknown}; choose from {list(BOUNDS)}")
    return ids


def cmd_scan(args) -> int:
    sources = [s for s in ("n", "file", "family") if getattr(args, s) is not None]
    if len(sources) != 1:
        raise UsageError("scan needs exactly one of --n, --file, --family")
    source = {"n": "exhaustive", "file": "file", "family": "family"}[sources[0]]
    try:
        cfg = ScanConfig(source=source, bound_ids=_bound_ids(args.bounds), n=args.n,
                         path=args.file, family=args.family, jobs=args.jobs,
                         epsilon=args.epsilon, emit=args.emit)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    with _open_out(args.output) as out:
        if args.format == "json":
            def sink(r):
                print(json.dumps(r.to_json()), file=out)
        else:
            def sink(r):
                j = r.to_json()
                print(f"{j['bound_id']:<20} {j['graph6']:<12} lhs={j['lhs']:<14} "
                      f"rhs={j['rhs']:<14} slack={j['slack']:<14} "
                      f"{'eq ' + j['equality_class'] if r.equality else ''}"
                      f"{'' if r.holds else 'VIOLATED(' + j['regime'] + ')'}", file=out)
        summary = run_scan(cfg, sink)

    print(json.dumps({b: s.as_dict() for b, s in summary.bounds.items()}, indent=1),
          file=sys.stderr)
    expected = {b: s.violated for b, s in summary.bounds.items()
                if s.violated and s.violated_by_regime.get("theorem", 0) == 0}
    if expected:
        print(f"expected (conjectured or disproved) violations: {expected}", file=sys.stderr)
    if summary.proved_violations:
        print(f"PROVED BOUND VIOLATED: {summary.proved_violations} reports", file=sys.stderr)
    return summary.exit_code


def _parse_ns(text: str) -> list[int]:
    ns = []
    for part in text.split(","):
        lo, _, hi = part.partition("..")
        ns.extend(range(int(lo), int(hi) + 1) if hi else [int(lo)])
    return ns


def cmd_ratio(args) -> int:
    ns = _parse_ns(args.n)
    if any(n < 6 for n in ns):
        raise UsageError("ratio needs every n >= 6")
    with _open_out(args.output) as out:
        for p in ratio_table(ns):
            if args.format == "json":
                print(json.dumps(p.as_dict()), file=out)
            else:
                print(f"n={p.n:<8} k={p.best_k:<6} product={_fmt(p.product):<16} "
                      f"ratio={p.ratio:.6f}  limit={LIMIT:.6f}  gap={p.ratio - LIMIT:+.6f}",
                      file=out)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.n < 4:
        raise UsageError("search needs n >= 4")
    res = search(args.n, args.iterations, args.seed)
    rep = res.as_dict()
    with _open_out(args.output) as out:
        if args.format == "json":
            print(json.dumps(rep), file=out)
        else:
            for key, val in rep.items():
                print(f"{key:>15}: {_fmt(val) if isinstance(val, float) else val}", file=out)
    return EXIT_OK


# ---- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--epsilon", type=float, default=EPS, help="one-sided tolerance")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--output", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=("json", "text"), default="text")

    p = _Parser(prog="ngspec", description="Laplacian and signless Laplacian "
                "Nordhaus-Gaddum bounds: inspection, scans and extremal search.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("spectrum", parents=[common], help="spectra and key values of one graph")
    s.add_argument("graph", help="graph6 string or family spec like star:6")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("construct", parents=[common], help="build a family member as graph6")
    s.add_argument("family", help="e.g. hn:9, kbip:2,3, bip_h:8,3,1,2")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("scan", parents=[common], help="check bounds over many graphs")
    s.add_argument("--n", type=int, help="every labelled graph on n vertices")
    s.add_argument("--file", help="graph6 file, one graph per line")
    s.add_argument("--family", help="family with one range parameter, e.g. hn:6..30")
    s.add_argument("--bounds", default="all", help="comma list of bound ids, or all")
    s.add_argument("--emit", choices=EMIT_MODES, default="violations")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("ratio", parents=[common], help="split-join product over n^2")
    s.add_argument("--n", required=True, help="values like 600,6000 or 6..30")
    s.set_defaults(func=cmd_ratio)

    s = sub.add_parser("search", parents=[common], help="hill climb on q1(G) q1(co-G)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--iterations", type=int, default=20000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, Graph6Error, ValueError, OSError) as exc:
        print(f"ngspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
