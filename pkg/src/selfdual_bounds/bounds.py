"""Two-sided bounds on the uncertainty constants, assembled per dimension.

Lower bounds are closed-form: in dimension 1 a refined argument through the
constant lambda = -min sin(u)/u, in higher dimensions a volume argument built
on exact half-integer Gamma values.  Upper bounds come from the certified
search machinery (family scan, limit-profile correction, LP over a grid,
Hermite combinations) and are always capped by the analytic ceiling
(d+2)/(2 pi) that the family attains in its a -> 1 limit.  Reports carry the
witness achieving the upper bound so it can be re-certified independently.

All upper bounds concern the smooth-class constant; the general constant is
at least half of it, a relation the report carries as a note rather than as
arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combos import (CorrectionError, GaussianCombo, LPConfig,
                     last_sign_change, lp_min_radius, minimize_correction)
from .gaussian import minimize_family
from .hermite import HermiteSearchConfig, hermite_search

BBAR_NOTE = ("upper bounds are for the smooth-class constant; "
             "the unrestricted constant lies between half of it and itself")

DEFAULT_LP_GRID: tuple[float, ...] = (1.0, 2.0, 2.08, 3.0)


def sinc_stationary_point(tol: float = 1e-12) -> float:
    """Root of u cos u - sin u in (pi, 3 pi/2): the first negative-lobe
    stationary point of sin(u)/u, solved by bisection."""
    if not 0.0 < tol < 1.0:
        raise ValueError("tol must be in (0, 1)")

    def g(u: float) -> float:
        return u * math.cos(u) - math.sin(u)

    lo, hi = math.pi + 0.1, 1.5 * math.pi - 0.1
    if not (g(lo) < 0.0 < g(hi)):
        raise RuntimeError("stationarity bracket failed")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lambda_const(tol: float = 1e-12) -> float:
    """lambda = -min_{u>0} sin(u)/u, evaluated as -cos(u*) at the
    stationary point (where tan u* = u*, so sin/u = cos there)."""
    return -math.cos(sinc_stationary_point(tol))


def lower_bound_d1(lam: float | None = None) -> tuple[float, float]:
    """(A_min, B1_min) = (1/(2(1+lambda)), A_min^2) for dimension 1.

    lam overrides the computed constant, which degenerates the bound to the
    elementary A >= 1/2 variant at lam = 0.
    """
    if lam is None:
        lam = lambda_const()
    if not math.isfinite(lam) or lam < 0.0:
        raise ValueError("lambda must be finite and nonnegative")
    a_min = 1.0 / (2.0 * (1.0 + lam))
    return a_min, a_min * a_min


def exact_gamma_half(d: int) -> tuple[Fraction, bool]:
    """Gamma(d/2 + 1) as (rational, carries_sqrt_pi).

    Even d: an exact integer (d/2)!.  Odd d: r * sqrt(pi) with r rational,
    by the recurrence Gamma(z+1) = z Gamma(z) from Gamma(1/2) = sqrt(pi).
    """
    if not isinstance(d, int) or d < 1:
        raise ValueError("d must be an integer >= 1")
    if d % 2 == 0:
        return Fraction(math.factorial(d // 2)), False
    r = Fraction(1)                 # Gamma(1/2) = 1 * sqrt(pi)
    z = Fraction(1, 2)
    while z < Fraction(d, 2) + 1:
        r *= z
        z += 1
    return r, True


def lower_bound_volume(d: int) -> float:
    """(1/pi) * (Gamma(d/2+1)/2)^(2/d), the volume-argument lower bound."""
    r, has_sqrt_pi = exact_gamma_half(d)
    half = r / 2
    if has_sqrt_pi:
        # (r sqrt(pi) / 2)^(2/d) / pi = (r/2)^(2/d) * pi^((1-d)/d)
        return (float(half) ** (2.0 / d)) * math.pi ** ((1.0 - d) / d)
    return (float(half) ** (2.0 / d)) / math.pi


def ceiling(d: int) -> float:
    """Analytic upper ceiling (d+2)/(2 pi) attained by the a -> 1 limit."""
    if not isinstance(d, int) or d < 1:
        raise ValueError("d must be an integer >= 1")
    return (d + 2) / (2.0 * math.pi)


@dataclass(frozen=True)
class BoundReport:
    """Two-sided bound for one dimension, with provenance tags."""

    dim: int
    lower: float
    lower_method: str           # "lambda-refined" (d=1) or "volume"
    upper: float
    upper_method: str
    ceiling: float
    witness: dict | None
    bbar_note: str = BBAR_NOTE

    def to_json_dict(self) -> dict:
        return {"dim": self.dim,
                "lower": self.lower,
                "lower_method": self.lower_method,
                "upper": self.upper,
                "upper_method": self.upper_method,
                "ceiling": self.ceiling,
                "witness": self.witness,
                "bbar_note": self.bbar_note}


def lower_bound(d: int) -> tuple[float, str]:
    """Best closed-form lower bound and its method tag."""
    if d == 1:
        return lower_bound_d1()[1], "lambda-refined"
    return lower_bound_volume(d), "volume"


def _limit_witness(d: int) -> tuple[float, str, dict]:
    combo = GaussianCombo(d, t_limit=1.0)
    r, cert = last_sign_change(combo)
    witness = {"kind": "gaussian", **combo.to_json_dict(),
               "R": r, "X_tail": cert.X_tail}
    return r / math.pi, "limit-ceiling", witness


def _gaussian_witness(combo: GaussianCombo) -> tuple[float, dict]:
    r, cert = last_sign_change(combo)
    witness = {"kind": "gaussian", **combo.to_json_dict(),
               "R": r, "X_tail": cert.X_tail}
    return r, witness


def upper_bound_assembly(d: int, effort: str,
                         family_a: float | None = None,
                         lp_grid: Sequence[float] | None = None,
                         lp_config: LPConfig | None = None,
                         hermite_config: HermiteSearchConfig | None = None
                         ) -> BoundReport:
    """Upper bound at the requested effort, capped by the analytic ceiling.

    family: best single family member (optionally pinned to family_a);
    correction: best limit-profile correction over a small set of base
    scales, falling back to family when no correction improves (the case in
    d >= 2, where the base profile is already nonpositive at the limit
    root); lp: grid search seeded with the correction result so higher
    effort can only improve; hermite: eigenfunction search, dimension 1
    only.
    """
    if not isinstance(d, int) or d < 1:
        raise ValueError("d must be an integer >= 1")
    if effort not in ("family", "correction", "lp", "hermite"):
        raise ValueError(f"unknown effort {effort!r}")
    if effort == "hermite" and d != 1:
        raise ValueError("hermite effort requires dimension 1")

    lo, lo_method = lower_bound(d)
    cap = ceiling(d)

    def family_result() -> tuple[float, str, dict]:
        if family_a is not None:
            x, witness = _gaussian_witness(GaussianCombo(d, ((family_a, 1.0),)))
            return x / math.pi, "family", witness
        a_star, _ = minimize_family(d)
        if a_star is None:
            return _limit_witness(d)
        x, witness = _gaussian_witness(GaussianCombo(d, ((a_star, 1.0),)))
        return x / math.pi, "family", witness

    def correction_candidates() -> list:
        candidates = []
        a_star, _ = minimize_family(d)
        for a0 in sorted({a_star, 2.0} if a_star is not None else {2.0}):
            try:
                candidates.append(minimize_correction(a0, d))
            except CorrectionError:
                continue
        return candidates

    def correction_result() -> tuple[float, str, dict]:
        candidates = correction_candidates()
        if not candidates:
            return family_result()   # no improving correction exists
        res = min(candidates, key=lambda r: r.R)
        witness = {"kind": "gaussian", **res.combo.to_json_dict(),
                   "R": res.R, "X_tail": res.cert.X_tail}
        return res.R / math.pi, "correction", witness

    if effort == "family":
        upper, method, witness = family_result()
    elif effort == "correction":
        upper, method, witness = correction_result()
    elif effort == "lp":
        # seeded with every correction candidate: more effort never regresses
        seeds = [c.combo for c in correction_candidates()]
        res = lp_min_radius(lp_grid or DEFAULT_LP_GRID, d,
                            config=lp_config, seed_combos=seeds)
        witness = {"kind": "gaussian", **res.combo.to_json_dict(),
                   "R": res.R, "X_tail": res.cert.X_tail,
                   "lp_radius": res.lp_radius}
        upper, method = res.R / math.pi, "lp"
    else:
        hres = hermite_search(4, hermite_config)
        witness = {"kind": "hermite", **hres.combo.to_json_dict(),
                   "radius_sq_pi": hres.radius_sq_pi, "A": hres.A}
        upper, method = hres.radius_sq_pi / math.pi, "hermite"

    if upper > cap:
        upper, method, witness = _limit_witness(d)
        # the limit root is analytically d/2+1; do not let bisection noise
        # push the report above the ceiling it states
        upper = min(upper, cap)
    return BoundReport(dim=d, lower=lo, lower_method=lo_method, upper=upper,
                       upper_method=method, ceiling=cap, witness=witness)
