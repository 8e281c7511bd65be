"""Print a per-dimension table of certified two-sided bounds.

Usage:
    python3 scripts/bound_table.py --dmax 8 --effort correction
"""

import argparse
import sys
import time

from selfdual_bounds.bounds import upper_bound_assembly


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dmax", type=int, default=8,
                        help="largest dimension to report (default 8)")
    parser.add_argument("--effort", default="correction",
                        choices=["family", "correction", "lp", "hermite"],
                        help="upper-bound effort level (default correction)")
    args = parser.parse_args(argv)
    if args.dmax < 1:
        parser.error("--dmax must be >= 1")
    if args.effort == "hermite" and args.dmax != 1:
        parser.error("--effort hermite reports dimension 1 only")

    header = (f"{'d':>3}  {'lower':>14}  {'upper':>14}  {'ceiling':>14}  "
              f"{'gap':>9}  method")
    print(header)
    print("-" * len(header))
    t0 = time.perf_counter()
    for d in range(1, args.dmax + 1):
        rep = upper_bound_assembly(d, args.effort)
        gap = rep.upper - rep.lower
        print(f"{d:>3}  {rep.lower:>14.10f}  {rep.upper:>14.10f}  "
              f"{rep.ceiling:>14.10f}  {gap:>9.5f}  "
              f"{rep.lower_method}/{rep.upper_method}")
    elapsed = time.perf_counter() - t0
    print(f"\n{args.dmax} dimensions at effort {args.effort!r} "
          f"in {elapsed:.2f} s; upper/ceiling ratio at d={args.dmax}: "
          f"{rep.upper / rep.ceiling:.6f}")
    print("note: " + rep.bbar_note)
    return 0


if __name__ == "__main__":
    sys.exit(main())
