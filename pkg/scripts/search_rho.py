"""Hill-climb lower bounds on max q1(G) q1(co-G) for several orders and seeds.

    python scripts/search_rho.py --n 6 8 10 12 --seeds 3 --iterations 20000
"""

import argparse

from ngspec.search import exhaustive_max, search


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[5, 6, 8, 10, 12])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--iterations", type=int, default=20000)
    args = ap.parse_args()

    for n in args.n:
        runs = [search(n, args.iterations, seed) for seed in range(args.seeds)]
        best = max(runs, key=lambda r: r.product)
        exact = f"{exhaustive_max(n)[0]:.6f}" if n <= 6 else "-"
        d = best.as_dict()
        print(f"n={n:<3} best={best.product:.6f} ratio={best.ratio:.4f} "
              f"family={best.family_product:.6f} (k={best.family_k}) exhaustive={exact} "
              f"graph6={d['graph6']}")


if __name__ == "__main__":
    main()
