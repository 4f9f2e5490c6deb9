"""Check every bound on every labelled graph up to a given order.

    python scripts/exhaustive_sweep.py --max-n 7 --jobs 4 --out sweep.json
"""

import argparse
import json
import time

from ngspec.bounds import BOUNDS
from ngspec.scan import ScanConfig, run_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--bounds", default="all")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default=None, help="write the per-n summaries as JSON")
    args = ap.parse_args()
    ids = list(BOUNDS) if args.bounds == "all" else args.bounds.split(",")

    table = {}
    for n in range(2, args.max_n + 1):
        t0 = time.time()
        summary = run_scan(ScanConfig("exhaustive", ids, n=n, jobs=args.jobs))
        table[n] = {b: s.as_dict() for b, s in summary.bounds.items()}
        bad = {b: s.violated for b, s in summary.bounds.items() if s.violated}
        print(f"n={n}  {time.time() - t0:7.1f}s  violations: {bad or 'none'}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(table, fh, indent=1)


if __name__ == "__main__":
    main()
