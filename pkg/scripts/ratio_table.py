"""Split-join product over n^2 against the limiting constant, with an eigensolver check.

    python scripts/ratio_table.py --n 6 10 20 50 100 600 6000 --verify-up-to 600
"""

import argparse

from ngspec.families import SplitJoin, construct
from ngspec.search import LIMIT, ratio_point
from ngspec.spectra import MatrixKind, spectrum


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[6, 9, 12, 30, 60, 100, 600, 6000])
    ap.add_argument("--verify-up-to", type=int, default=600,
                    help="full eigensolve for n up to this value")
    args = ap.parse_args()

    print(f"{'n':>6} {'k':>5} {'k/n':>7} {'product':>16} {'ratio':>9} {'gap':>10} {'eig check':>10}")
    for n in args.n:
        p = ratio_point(n)
        check = ""
        if n <= args.verify_up_to:
            g = construct(SplitJoin(n, p.best_k))
            Q = MatrixKind.SIGNLESS_LAPLACIAN
            prod = spectrum(g, Q).largest * spectrum(g.complement(), Q).largest
            check = f"{abs(prod - p.product):.1e}"
        print(f"{n:>6} {p.best_k:>5} {p.best_k / n:>7.4f} {p.product:>16.4f} {p.ratio:>9.6f} "
              f"{p.ratio - LIMIT:>+10.6f} {check:>10}")
    print(f"limit (5/18)(4 + sqrt 14) = {LIMIT:.6f}")


if __name__ == "__main__":
    main()
