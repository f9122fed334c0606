"""Argmin sectors of K_x over a (k, N) grid, as plot-ready CSV.

    python3 scripts/dichotomy_grid.py --k-max 9 --n-max 60 --x 1 > grid.csv
"""
import argparse
import sys
from fractions import Fraction

from kbody_qfi.case_two import dichotomy_map
from kbody_qfi.cli import HEADERS
from kbody_qfi.serialize import dumps_csv, to_record


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--k-max", type=int, default=9)
    ap.add_argument("--n-max", type=int, default=60)
    ap.add_argument("--x", type=Fraction, default=Fraction(1))
    ap.add_argument("--summary", action="store_true", help="print odd/even-k exceptions instead of CSV")
    args = ap.parse_args()

    cells = dichotomy_map(args.k_max, args.n_max, args.x)
    if not args.summary:
        sys.stdout.write(dumps_csv([to_record(c) for c in cells], HEADERS["dichotomy"]))
        return
    odd_miss = [(c.k, c.N) for c in cells if c.k % 2 and not c.zero_in_argmin]
    even_hit = [(c.k, c.N) for c in cells if c.k % 2 == 0 and (c.zero_in_argmin or c.N in c.argmin_sectors)]
    print(f"x = {args.x}, k <= {args.k_max}, N <= {args.n_max}: {len(cells)} cells")
    print(f"odd k with 0 not in argmin: {odd_miss}")
    print(f"even k with 0 or N in argmin: {even_hit}")


if __name__ == "__main__":
    main()
