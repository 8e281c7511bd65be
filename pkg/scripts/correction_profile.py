"""Trace the certified radius along the limit-profile correction path.

For a base scale a0 the correction family is H_{a0} - t L with L the limit
direction X(X - d/2 - 1).  The last sign change R(t) decreases as t grows,
until the grazing cap where the profile touches zero beyond the limit root;
this script prints the cap, the certified optimum, and a CSV of (t, R)
samples on [0, cap) for plotting.

Usage:
    python3 scripts/correction_profile.py --a0 2.0 --points 25 > profile.csv
"""

import argparse
import csv
import sys

from selfdual_bounds.combos import (CorrectionError, correction_scan,
                                    minimize_correction)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--a0", type=float, default=2.0,
                        help="base family scale (default 2.0)")
    parser.add_argument("--dim", type=int, default=1)
    parser.add_argument("--points", type=int, default=25,
                        help="number of (t, R) samples (default 25)")
    args = parser.parse_args(argv)
    if not args.a0 > 1.0:
        parser.error("--a0 must exceed 1")
    if args.points < 2:
        parser.error("--points must be >= 2")

    try:
        res = minimize_correction(args.a0, args.dim)
    except CorrectionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    print(f"# a0 = {args.a0}, dim = {args.dim}", file=sys.stderr)
    print(f"# cap t = {res.t_limit:.12g}", file=sys.stderr)
    print(f"# base root R(0) = {res.base_root:.12g}", file=sys.stderr)
    print(f"# optimum R = {res.R:.12g} "
          f"(improvement {res.base_root - res.R:.6f})", file=sys.stderr)

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["t", "R"])
    for t, radius in correction_scan(args.a0, args.dim, n=args.points):
        writer.writerow([f"{t:.12g}", f"{radius:.12g}"])
    return 0


if __name__ == "__main__":
    sys.exit(main())
