"""Command-line surface: every computation, machine-readable output.

Structured results are printed as a JSON envelope {schema_version, command,
inputs, results, provenance} with floats at 12 significant digits; tabular
results (scan-a, plot-data) are CSV on stdout.  Exit codes: 0 success, 1
computation or verification failure, 2 usage errors (including NaN/inf
numeric flags).  Scans may parallelize across threads, capped by the
SELFDUAL_BOUNDS_WORKERS environment variable; output order is deterministic
either way.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from . import bounds as bounds_mod
from . import combos as combos_mod
from . import gaussian as gaussian_mod
from . import number_fields as nf_mod
from . import series as series_mod
from .hermite import HermiteSearchConfig, hermite_search

SCHEMA_VERSION = "1.0"

_FAILURES = (gaussian_mod.RootBracketError, combos_mod.CorrectionError,
             combos_mod.LPInfeasibleError, combos_mod.CertificationError,
             combos_mod.NegativeAtInfinityError, ValueError)


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError("NaN/inf not accepted")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _big_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _grid(text: str) -> list[float]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        value = _finite_float(part)
        if value < 1.0:
            raise argparse.ArgumentTypeError(
                "grid entries must be >= 1 (1 selects the limit profile)")
        out.append(value)
    if not out:
        raise argparse.ArgumentTypeError("grid must be nonempty")
    return out


def _round12(obj):
    """Clamp every float to 12 significant digits, recursively."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _emit(command: str, inputs: dict, results, provenance: list[str]) -> None:
    envelope = {"schema_version": SCHEMA_VERSION,
                "command": command,
                "inputs": _round12(inputs),
                "results": _round12(results),
                "provenance": provenance}
    json.dump(envelope, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_xa(args) -> int:
    params = gaussian_mod.GaussianParams(args.a, args.dim)
    x = gaussian_mod.solve_Xa(params, tol=args.tol)
    _emit("xa",
          {"a": args.a, "dim": args.dim, "tol": args.tol},
          {"X_a": x, "A": gaussian_mod.radius_from_X(x)},
          ["safeguarded bisection plus Newton polish on the convex "
           "rescaled profile"])
    return 0


def _cmd_scan_a(args) -> int:
    if args.max <= args.min:
        raise ValueError("--max must exceed --min")
    rows = gaussian_mod.scan_family(args.dim, args.min, args.max, args.steps,
                                    workers=_worker_cap(args.steps))
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["a", "X_a", "A"])
    for a, x, radius in rows:
        writer.writerow([f"{a:.12g}", f"{x:.12g}", f"{radius:.12g}"])
    return 0


def _worker_cap(n_tasks: int) -> int:
    env = os.environ.get("SELFDUAL_BOUNDS_WORKERS", "")
    try:
        cap = int(env) if env else (os.cpu_count() or 1)
    except ValueError:
        cap = os.cpu_count() or 1
    return max(1, min(cap, n_tasks))


def _cmd_bounds(args) -> int:
    report = bounds_mod.upper_bound_assembly(args.dim, args.effort,
                                             family_a=args.a)
    _emit("bounds",
          {"dim": args.dim, "effort": args.effort, "a": args.a},
          report.to_json_dict(),
          ["closed-form lower bound",
           "search upper bound with interval-certified sign change",
           "analytic ceiling cap (d+2)/(2 pi)"])
    return 0


def _cmd_optimize(args) -> int:
    cfg = combos_mod.LPConfig(n_points=args.nodes, x_span=args.xmax)
    res = combos_mod.lp_min_radius(args.grid, args.dim, config=cfg)
    results = {"R": res.R,
               "lp_radius": res.lp_radius,
               "combo": res.combo.to_json_dict(),
               "certificate": {"R": res.cert.R,
                               "X_tail": res.cert.X_tail,
                               "samples_checked": res.cert.samples_checked}}
    _emit("optimize",
          {"dim": args.dim, "grid": args.grid, "xmax": args.xmax,
           "nodes": args.nodes},
          results,
          ["bisection on LP feasibility over Chebyshev constraint points",
           "per-dominant-scale scenario decomposition",
           "certified last sign change authoritative over the discretized LP"])
    return 0


def _cmd_hermite(args) -> int:
    if args.dim != 1:
        raise ValueError("hermite search is dimension 1 only")
    cfg = HermiteSearchConfig(seed=args.seed)
    res = hermite_search(args.modes, cfg)
    _emit("hermite",
          {"modes": args.modes, "dim": args.dim, "seed": args.seed},
          {"pi_A_sq": res.radius_sq_pi,
           "A": res.A,
           "coeffs": list(res.combo.coeffs),
           "per_stage": list(res.per_stage)},
          ["chained multi-start coordinate pattern search",
           "companion-matrix largest real root"])
    return 0


def _cmd_series_check(args) -> int:
    checks = series_mod.run_identity_checks(order=args.order)
    results = [{"name": c.name, "expected": c.expected, "actual": c.actual,
                "ok": c.ok} for c in checks]
    all_ok = all(c.ok for c in checks)
    _emit("series-check",
          {"order": args.order},
          {"checks": results, "all_ok": all_ok},
          ["exact rational power-series arithmetic; equality is bit-exact"])
    return 0 if all_ok else 1


def _cmd_field_check(args) -> int:
    params = nf_mod.NumberFieldParams(args.degree, args.disc)
    bbar = args.bbar if args.bbar is not None else bounds_mod.ceiling(
        args.degree)
    value, verdict = nf_mod.prop1_margin(params, bbar)
    _emit("field-check",
          {"degree": args.degree, "disc": args.disc, "bbar": bbar},
          {"value": value,
           "verdict": verdict,
           "root_discriminant": nf_mod.root_discriminant(params),
           "exceeds_odlyzko_threshold":
               nf_mod.exceeds_odlyzko_threshold(params),
           "two_pi_e": nf_mod.TWO_PI_E},
          ["log-domain root-discriminant margin versus the supplied "
           "smooth-class upper bound"])
    return 0


def _cmd_tower(args) -> int:
    level = nf_mod.tower(args.d0, args.disc0, args.p, args.m)
    results = {"level": level.level,
               "degree": level.degree,
               "disc": level.disc,
               "log2_disc": level.log2_disc,
               "C": level.C,
               "linear_bound": level.linear_bound,
               "note": level.note}
    _emit("tower",
          {"d0": args.d0, "disc0": args.disc0, "p": args.p, "m": args.m},
          results,
          ["exact big-integer discriminant powers with log fallback past "
           "the bit budget"])
    return 0


def _cmd_plot_data(args) -> int:
    params = gaussian_mod.GaussianParams(args.a, args.dim)
    x_root = gaussian_mod.solve_Xa(params)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    n = 257
    if args.what == "H":
        writer.writerow(["X", "H"])
        for i in range(n):
            x = (x_root + 5.0) * i / (n - 1)
            writer.writerow([f"{x:.12g}",
                             f"{gaussian_mod.eval_H(params, x):.12g}"])
    else:
        writer.writerow(["x", "G"])
        x_max = math.sqrt((x_root + 5.0) / math.pi)
        for i in range(n):
            x = x_max * i / (n - 1)
            writer.writerow([f"{x:.12g}",
                             f"{gaussian_mod.eval_g(params, x):.12g}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selfdual-bounds",
        description="Two-sided bounds on Fourier uncertainty constants from "
                    "self-dual Gaussian combinations and Hermite "
                    "eigenfunctions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("xa", help="root X_a and radius A for one family "
                                  "member")
    p.add_argument("--a", type=_finite_float, required=True)
    p.add_argument("--dim", type=_positive_int, default=1)
    p.add_argument("--tol", type=_finite_float, default=1e-12)
    p.set_defaults(func=_cmd_xa)

    p = sub.add_parser("scan-a", help="CSV table of (a, X_a, A) over a "
                                      "scale range")
    p.add_argument("--dim", type=_positive_int, required=True)
    p.add_argument("--min", type=_finite_float, required=True)
    p.add_argument("--max", type=_finite_float, required=True)
    p.add_argument("--steps", type=_positive_int, required=True)
    p.set_defaults(func=_cmd_scan_a)

    p = sub.add_parser("bounds", help="two-sided bound report for one "
                                      "dimension")
    p.add_argument("--dim", type=_positive_int, required=True)
    p.add_argument("--effort", required=True,
                   choices=["family", "correction", "lp", "hermite"])
    p.add_argument("--a", type=_finite_float, default=None,
                   help="pin the family effort to this scale")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("optimize", help="LP search for the smallest "
                                        "certified radius over a grid")
    p.add_argument("--dim", type=_positive_int, required=True)
    p.add_argument("--grid", type=_grid, required=True,
                   help="comma-separated scales; 1 selects the limit profile")
    p.add_argument("--xmax", type=_finite_float, default=40.0,
                   help="constraint window extent beyond the trial radius")
    p.add_argument("--nodes", type=_positive_int, default=2000,
                   help="number of Chebyshev constraint points")
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("hermite", help="search eigenfunction combinations "
                                       "(dimension 1)")
    p.add_argument("--modes", type=_positive_int, required=True)
    p.add_argument("--dim", type=_positive_int, default=1)
    p.add_argument("--seed", type=_nonneg_int, default=0)
    p.set_defaults(func=_cmd_hermite)

    p = sub.add_parser("series-check", help="verify all exact series "
                                            "identities (exit 0 iff all "
                                            "pass)")
    p.add_argument("--order", type=_positive_int, default=6)
    p.set_defaults(func=_cmd_series_check)

    p = sub.add_parser("field-check", help="discriminant margin versus a "
                                           "smooth-class upper bound")
    p.add_argument("--degree", type=_positive_int, required=True)
    p.add_argument("--disc", type=_big_int, required=True)
    p.add_argument("--bbar", type=_finite_float, default=None,
                   help="upper bound to compare against (default: the "
                        "analytic ceiling for the degree)")
    p.set_defaults(func=_cmd_field_check)

    p = sub.add_parser("tower", help="constant-root-discriminant tower "
                                     "level")
    p.add_argument("--d0", type=_positive_int, required=True)
    p.add_argument("--disc0", type=_big_int, required=True)
    p.add_argument("--p", type=_positive_int, required=True)
    p.add_argument("--m", type=_nonneg_int, required=True)
    p.set_defaults(func=_cmd_tower)

    p = sub.add_parser("plot-data", help="CSV profile samples for external "
                                         "plotting")
    p.add_argument("--dim", type=_positive_int, required=True)
    p.add_argument("--what", required=True, choices=["H", "G"])
    p.add_argument("--a", type=_finite_float, required=True)
    p.set_defaults(func=_cmd_plot_data)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # cross-argument usage errors exit 2, like any other bad invocation
    if args.func is _cmd_hermite and args.dim != 1:
        parser.error("argument --dim: hermite search is dimension 1 only")
    if (args.func is _cmd_bounds and args.effort == "hermite"
            and args.dim != 1):
        parser.error("argument --effort: hermite requires --dim 1")
    try:
        return args.func(args)
    except _FAILURES as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
