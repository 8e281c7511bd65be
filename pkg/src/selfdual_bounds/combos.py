"""Finite combinations of the Gaussian family and certified radii.

A combination f = sum_i t_i g_{a_i} + t_limit * (limit direction) has the
X-domain profile

    combo_H(X) = sum_i t_i H_{a_i}(X) + t_limit * X (X - d/2 - 1),

and is eventually positive iff the coefficient of the fastest-growing term is
positive.  The quantity of interest is the last sign change R: the largest X
where the profile passes from negative to permanently nonnegative.  R is
located by dense scanning plus bisection and then *certified*: an explicit
dominance inequality makes the profile provably positive beyond a computed
threshold X_tail, and the window [R, X_tail] is screened by interval
derivative bounds.  Certification is authoritative; every optimizer in this
module re-certifies whatever it found.

Two optimizers are provided: minimize_correction subtracts the best multiple
of the limit profile from a single family member, and lp_min_radius searches
the full span of a user grid by bisecting on R over LP feasibility problems.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

from .gaussian import GaussianParams, eval_H, limit_profile, solve_Xa


class NegativeAtInfinityError(ValueError):
    """The dominant-growth coefficient is not positive."""


class CorrectionError(RuntimeError):
    """No positive multiple of the limit profile improves the radius."""


class LPInfeasibleError(RuntimeError):
    """The LP search found no certifiable combination."""


class CertificationError(RuntimeError):
    """The screening pass exhausted its budget without a verdict."""


@dataclass(frozen=True)
class GaussianCombo:
    """Finite signed combination in dimension dim.

    nodes is a tuple of (a_i, t_i) with the a_i strictly increasing and all
    above 1; t_limit is the signed coefficient of the limit profile
    L(X) = X(X - d/2 - 1).  A finite sign-change radius requires the
    dominant-growth coefficient (t of the largest a, or t_limit when there
    are no nodes) to be positive; that is checked where it matters, not here,
    so that intermediate objects stay representable.
    """

    dim: int
    nodes: tuple[tuple[float, float], ...] = ()
    t_limit: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError("dim must be an integer >= 1")
        prev = 1.0
        for a, t in self.nodes:
            if not (math.isfinite(a) and math.isfinite(t)):
                raise ValueError("node entries must be finite")
            if a <= prev:
                raise ValueError("node scales must be strictly increasing and > 1")
            prev = a
        if not math.isfinite(self.t_limit):
            raise ValueError("t_limit must be finite")
        if all(t == 0.0 for _, t in self.nodes) and self.t_limit == 0.0:
            raise ValueError("combination must have a nonzero coefficient")

    @property
    def dominant_coefficient(self) -> float:
        return self.nodes[-1][1] if self.nodes else self.t_limit

    @property
    def dominant_rate(self) -> float:
        """Growth rate of the leading exponential (0 for the bare limit)."""
        if not self.nodes:
            return 0.0
        a = self.nodes[-1][0]
        return 1.0 - a ** -2

    def scaled(self, factor: float) -> "GaussianCombo":
        return GaussianCombo(self.dim,
                             tuple((a, factor * t) for a, t in self.nodes),
                             factor * self.t_limit)

    def to_json_dict(self) -> dict:
        return {"dim": self.dim,
                "nodes": [{"a": a, "t": t} for a, t in self.nodes],
                "limit_coeff": self.t_limit}

    @staticmethod
    def from_json_dict(obj: dict) -> "GaussianCombo":
        return GaussianCombo(int(obj["dim"]),
                             tuple((float(n["a"]), float(n["t"]))
                                   for n in obj.get("nodes", [])),
                             float(obj.get("limit_coeff", 0.0)))


@dataclass(frozen=True)
class RadiusCertificate:
    """Record of the positivity check accompanying a radius.

    The combination was verified nonnegative at every checked sample in
    [R, X_tail], interval screening covered the gaps, and the dominance
    inequality (dominant term > sum of magnitudes of all others) holds from
    X_tail on.
    """

    R: float
    X_tail: float
    samples_checked: int


def combo_H(combo: GaussianCombo, X):
    """Profile value at X (scalar or array); exact 0 at X = 0."""
    x = np.asarray(X, dtype=float)
    if np.any(x < 0):
        raise ValueError("X must be nonnegative")
    out = np.zeros_like(x)
    d = combo.dim
    for a, t in combo.nodes:
        if t == 0.0:
            continue
        ad = a ** d
        out = out + t * (ad * np.expm1((1.0 - a * a) * x)
                         + np.expm1((1.0 - a ** -2) * x))
    if combo.t_limit != 0.0:
        out = out + combo.t_limit * x * (x - d / 2.0 - 1.0)
    return float(out) if np.isscalar(X) else out


def _scaled_profile(combo: GaussianCombo, x: np.ndarray) -> np.ndarray:
    """combo_H(X) * exp(-r X) with r the dominant growth rate.

    Same sign as combo_H everywhere, but free of overflow: every exponent is
    nonpositive, so the certification passes can probe arbitrarily far out.
    """
    r = combo.dominant_rate
    d = combo.dim
    out = np.zeros_like(x)
    for a, t in combo.nodes:
        if t == 0.0:
            continue
        ad = a ** d
        out = out + t * (ad * np.exp((1.0 - a * a - r) * x)
                         + np.exp((1.0 - a ** -2 - r) * x)
                         - (1.0 + ad) * np.exp(-r * x))
    if combo.t_limit != 0.0:
        out = out + combo.t_limit * x * (x - d / 2.0 - 1.0) * np.exp(-r * x)
    return out


def _scaled_derivative_bound(combo: GaussianCombo, x1: np.ndarray,
                             x2: np.ndarray) -> np.ndarray:
    """Upper bound on |d/dX of the scaled profile| over [x1, x2], vectorized.

    Every exponential envelope has a nonpositive exponent, hence is maximal
    at the left endpoint; the polynomial piece is bounded through endpoint
    values of its convex factors.
    """
    r = combo.dominant_rate
    d = combo.dim
    bound = np.zeros_like(x1)
    for a, t in combo.nodes:
        if t == 0.0:
            continue
        ad = a ** d
        s1 = 1.0 - a * a - r
        s2 = 1.0 - a ** -2 - r
        bound = bound + abs(t) * (ad * abs(s1) * np.exp(s1 * x1)
                                  + abs(s2) * np.exp(s2 * x1)
                                  + r * (1.0 + ad) * np.exp(-r * x1))
    if combo.t_limit != 0.0:
        c1 = d / 2.0 + 1.0
        lin = np.maximum(np.abs(2.0 * x1 - c1), np.abs(2.0 * x2 - c1))
        quad = np.maximum(np.abs(x1 * (x1 - c1)), np.abs(x2 * (x2 - c1)))
        bound = bound + abs(combo.t_limit) * (lin + r * quad) * np.exp(-r * x1)
    return bound


def _require_dominance(combo: GaussianCombo) -> None:
    if combo.dominant_coefficient <= 0.0:
        raise NegativeAtInfinityError("negative at infinity")


def tail_threshold(combo: GaussianCombo) -> float:
    """Smallest checked X beyond which the dominant term provably wins.

    For each competing piece bounded by m e^{s X} the dominant t e^{r X} must
    exceed N * m e^{s X} (N = number of competitors), i.e. X >= (log(N m) -
    log t)/(r - s), compared in the log domain.  The polynomial piece
    |t_limit| X^2 is handled by doubling and bisection on the monotone gap
    r X - 2 log X.  Floored at d/2 + 2.
    """
    _require_dominance(combo)
    d = combo.dim
    floor = d / 2.0 + 2.0
    if not combo.nodes:
        return floor
    r = combo.dominant_rate
    tau = combo.dominant_coefficient
    pieces: list[tuple[float, float]] = []  # (magnitude, rate), exponentials
    for i, (a, t) in enumerate(combo.nodes):
        if t == 0.0:
            continue
        ad = a ** d
        pieces.append((abs(t) * ad, 1.0 - a * a))
        pieces.append((abs(t) * (1.0 + ad), 0.0))
        if i != len(combo.nodes) - 1:
            pieces.append((abs(t), 1.0 - a ** -2))
    n_comp = len(pieces) + (1 if combo.t_limit != 0.0 else 0)
    log_nt = math.log(n_comp) - math.log(tau)
    x_tail = floor
    for m, s in pieces:
        if m == 0.0:
            continue
        x_tail = max(x_tail, (log_nt + math.log(m)) / (r - s))
    if combo.t_limit != 0.0:
        target = log_nt + math.log(abs(combo.t_limit))

        def gap(x: float) -> float:
            return r * x - 2.0 * math.log(x) - target

        lo = max(floor, 2.0 / r)
        hi = lo
        while gap(hi) < 0.0:
            hi *= 2.0
        if hi > lo:
            while hi - lo > 1e-3 * hi:
                mid = 0.5 * (lo + hi)
                if gap(mid) < 0.0:
                    lo = mid
                else:
                    hi = mid
        x_tail = max(x_tail, hi)
    return x_tail


def _dominance_holds(combo: GaussianCombo, x: float) -> bool:
    """Direct check of the tail inequality at one point, in scaled form."""
    if not combo.nodes:
        return limit_profile(combo.dim, x) > 0.0
    r = combo.dominant_rate
    d = combo.dim
    tau = combo.dominant_coefficient
    total = 0.0
    for i, (a, t) in enumerate(combo.nodes):
        if t == 0.0:
            continue
        ad = a ** d
        total += abs(t) * ad * math.exp((1.0 - a * a - r) * x)
        total += abs(t) * (1.0 + ad) * math.exp(-r * x)
        if i != len(combo.nodes) - 1:
            total += abs(t) * math.exp((1.0 - a ** -2 - r) * x)
    if combo.t_limit != 0.0:
        total += abs(combo.t_limit) * x * x * math.exp(-r * x)
    return tau >= total


def certify_nonnegative(combo: GaussianCombo, lo: float, hi: float,
                        max_evals: int = 4_000_000
                        ) -> tuple[int, float | None]:
    """Screen [lo, hi] for negativity of the profile.

    Returns (samples_used, first_violation_x_or_None).  An interval [x1, x2]
    is accepted when min(F(x1), F(x2)) - D (x2-x1)/2 >= 0 with D an interval
    bound on |F'|; failing intervals are split until certified, violated, or
    shorter than a floor where endpoint values within rounding of zero are
    accepted (that happens only at the sign-change point itself and at
    grazing tangencies).
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo < 0.0:
        raise ValueError("interval endpoints must be finite and nonnegative")
    if hi <= lo:
        raise ValueError("empty interval")
    scale = sum(abs(t) * (1 + a ** combo.dim) for a, t in combo.nodes)
    scale += abs(combo.t_limit) + abs(combo.dominant_coefficient)
    tiny = 1e-13 * max(1.0, scale)
    n0 = int(min(max(1024, (hi - lo) * 256), 200_000))
    xs = np.linspace(lo, hi, n0)
    fs = _scaled_profile(combo, xs)
    used = n0
    bad = np.where(fs < -tiny)[0]
    if bad.size:
        return used, float(xs[bad[0]])
    x1, x2 = xs[:-1], xs[1:]
    f1, f2 = fs[:-1], fs[1:]
    floor = 1e-9 * max(1.0, hi)
    while x1.size:
        if used > max_evals:
            raise CertificationError("screening budget exhausted")
        d_bound = _scaled_derivative_bound(combo, x1, x2)
        margin = np.minimum(f1, f2) - 0.5 * d_bound * (x2 - x1)
        ok = margin >= 0.0
        short = (x2 - x1) < floor
        accept_short = short & (np.minimum(f1, f2) >= -tiny)
        violated = short & ~accept_short
        if np.any(violated):
            return used, float(x1[np.argmax(violated)])
        keep = ~ok & ~short
        x1, x2, f1, f2 = x1[keep], x2[keep], f1[keep], f2[keep]
        if not x1.size:
            break
        xm = 0.5 * (x1 + x2)
        fm = _scaled_profile(combo, xm)
        used += xm.size
        neg = fm < -tiny
        if np.any(neg):
            return used, float(xm[np.argmax(neg)])
        x1 = np.concatenate([x1, xm])
        x2 = np.concatenate([xm, x2])
        f1 = np.concatenate([f1, fm])
        f2 = np.concatenate([fm, f2])
    return used, None


def last_sign_change(combo: GaussianCombo, tol: float = 1e-9
                     ) -> tuple[float, RadiusCertificate]:
    """Largest X where the profile turns permanently nonnegative.

    Scans (0, X_tail] densely, refines the last negative-to-positive crossing
    by bisection (reporting the bracket's upper edge, so nonnegativity holds
    from R on), then certifies [R, X_tail]; if certification uncovers a dip
    the scan restarts beyond it.  Returns R = 0 when no sign change exists:
    the combination is nonnegative on all of (0, infinity).
    """
    _require_dominance(combo)
    x_tail = tail_threshold(combo)
    if not _dominance_holds(combo, x_tail):
        raise CertificationError("tail inequality failed at its own threshold")

    def refine(lo: float, hi: float) -> float:
        # invariant: profile < 0 at lo, >= 0 at hi
        width = max(tol, 1e-14 * hi)
        while hi - lo > width:
            mid = 0.5 * (lo + hi)
            if _scaled_profile(combo, np.asarray([mid]))[0] < 0.0:
                lo = mid
            else:
                hi = mid
        return hi

    samples = 0
    start = 1e-12
    R = 0.0
    for _ in range(8):
        n = int(min(max(8192, x_tail * 512), 400_000))
        xs = np.linspace(start, x_tail, n)
        fs = _scaled_profile(combo, xs)
        samples += n
        neg = np.where(fs < 0.0)[0]
        if neg.size:
            i = int(neg[-1])
            if i + 1 >= n:
                raise CertificationError("negative at the certified tail")
            R = max(R, refine(float(xs[i]), float(xs[i + 1])))
        lo_cert = max(R, start)
        violation = None
        if lo_cert < x_tail:
            used, violation = certify_nonnegative(combo, lo_cert, x_tail)
            samples += used
        if violation is None:
            cert = RadiusCertificate(R=R, X_tail=max(x_tail, R + 1.0),
                                     samples_checked=samples)
            return R, cert
        start = violation  # a dip beyond R; rescan from there
    raise CertificationError("sign-change scan did not stabilize")


@dataclass(frozen=True)
class CorrectionResult:
    """Outcome of the limit-profile correction at one base scale."""

    t_limit: float          # optimal subtracted coefficient
    R: float                # certified last sign change at the optimum
    base_root: float        # radius without correction, for comparison
    combo: GaussianCombo
    cert: RadiusCertificate


def correction_cap(a0: float, dim: int) -> tuple[float, float]:
    """sup of t with H_{a0} - t L >= 0 on (d/2+1, inf), and its argmin.

    Equals inf_{X > d/2+1} H_{a0}(X)/L(X); both factors are positive there
    once H_{a0}(d/2+1) > 0.  Located by a coarse scan plus golden-section.
    """
    params = GaussianParams(a0, dim)
    c1 = dim / 2.0 + 1.0
    if eval_H(params, c1) <= 0.0:
        raise CorrectionError(
            "no positive correction coefficient improves on zero: the base "
            "profile is nonpositive at the limit-profile root")

    def ratio(x: float) -> float:
        return eval_H(params, x) / limit_profile(dim, x)

    span = 40.0
    for _ in range(4):
        xs = np.linspace(c1 + 1e-4, c1 + span, 512)
        vals = [ratio(float(x)) for x in xs]
        i = int(np.argmin(vals))
        if i < len(xs) - 2:
            break
        span *= 2.0  # minimum escaped the window; widen
    lo = float(xs[max(i - 1, 0)])
    hi = float(xs[min(i + 1, len(xs) - 1)])
    inv_gr = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - inv_gr * (hi - lo)
    x2 = lo + inv_gr * (hi - lo)
    f1, f2 = ratio(x1), ratio(x2)
    while hi - lo > 1e-12:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - inv_gr * (hi - lo)
            f1 = ratio(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + inv_gr * (hi - lo)
            f2 = ratio(x2)
    x_star = 0.5 * (lo + hi)
    return ratio(x_star), x_star


def minimize_correction(a0: float, dim: int = 1,
                        tol: float = 1e-9) -> CorrectionResult:
    """Minimize over t >= 0 the last sign change of H_{a0} - t L.

    Raising t lifts the profile on (0, d/2+1), where L < 0, so the crossing
    radius decreases monotonically until the grazing point where the profile
    touches zero beyond d/2+1; past that cap the last sign change jumps
    outward.  The minimum is therefore attained at the cap returned by
    correction_cap.  The certified combination uses the cap shrunk by one
    part in 1e9, keeping the grazing dip strictly positive so that the
    sign-change scan is immune to rounding; the induced radius error is far
    below tol.
    """
    base_root = solve_Xa(GaussianParams(a0, dim))
    t_cap, _ = correction_cap(a0, dim)
    if t_cap <= 0.0:
        raise CorrectionError(
            "no positive correction coefficient improves on zero")
    t_eff = t_cap * (1.0 - 1e-9)
    combo = GaussianCombo(dim, ((a0, 1.0),), t_limit=-t_eff)
    R, cert = last_sign_change(combo, tol)
    return CorrectionResult(t_limit=t_cap, R=R, base_root=base_root,
                            combo=combo, cert=cert)


def correction_scan(a0: float, dim: int = 1,
                    n: int = 25) -> list[tuple[float, float]]:
    """(t, R(t)) along t in [0, cap); R decreases monotonically on it."""
    t_cap, _ = correction_cap(a0, dim)
    out = []
    for i in range(n):
        t = t_cap * i / n
        if t == 0.0:
            combo = GaussianCombo(dim, ((a0, 1.0),))
        else:
            combo = GaussianCombo(dim, ((a0, 1.0),), t_limit=-t)
        R, _ = last_sign_change(combo)
        out.append((t, R))
    return out


@dataclass(frozen=True)
class LPConfig:
    """Discretization and search controls for lp_min_radius."""

    n_points: int = 2000        # Chebyshev-spaced X constraints per trial
    x_span: float = 40.0        # constraint window extends to R + x_span
    r_tol: float = 1e-4         # bisection tolerance on R
    coeff_bound: float = 1e6    # box on free coefficients
    margin: float = 1e-6        # interior margin for the witness cleanup
    r_min: float = 0.05         # left end of the bisection interval


@dataclass(frozen=True)
class LPResult:
    R: float                    # certified radius (authoritative)
    lp_radius: float            # raw LP-feasibility bisection endpoint
    combo: GaussianCombo
    cert: RadiusCertificate


def _chebyshev_points(r: float, span: float, n: int) -> np.ndarray:
    j = np.arange(n)
    return r + 0.5 * span * (1.0 - np.cos(np.pi * (j + 0.5) / n))


def _basis_column(a: float, dim: int, xs: np.ndarray) -> np.ndarray:
    ad = a ** dim
    return ad * np.expm1((1.0 - a * a) * xs) + np.expm1((1.0 - a ** -2) * xs)


def _solve_scenario(xs: np.ndarray, dom: np.ndarray, free_cols: list,
                    cfg: LPConfig) -> np.ndarray | None:
    """Feasibility of dom + sum x_k col_k >= 0 at all xs; None if infeasible.

    Phase 1 maximizes the uniform margin s (capped at 1); phase 2 shrinks the
    coefficients by L1 minimization at a fixed small margin, so witnesses do
    not ride the coefficient box.
    """
    n = xs.size
    if not free_cols:
        return np.zeros(0) if float(np.min(dom)) >= 0.0 else None
    B = np.column_stack(free_cols)
    nv = B.shape[1]
    a_ub = np.hstack([-B, np.ones((n, 1))])
    c_obj = np.zeros(nv + 1)
    c_obj[-1] = -1.0
    bounds = [(-cfg.coeff_bound, cfg.coeff_bound)] * nv + [(None, 1.0)]
    r1 = linprog(c_obj, A_ub=a_ub, b_ub=dom, bounds=bounds, method="highs")
    if r1.status != 0 or r1.x is None or r1.x[-1] < 0.0:
        return None
    slack = float(r1.x[-1])
    margin = min(cfg.margin, 0.5 * slack) if slack > 0 else 0.0
    a2 = np.hstack([-B, B])
    r2 = linprog(np.ones(2 * nv), A_ub=a2, b_ub=dom - margin,
                 bounds=[(0, cfg.coeff_bound)] * (2 * nv), method="highs")
    if r2.status == 0 and r2.x is not None:
        return r2.x[:nv] - r2.x[nv:]
    return r1.x[:nv]


def lp_min_radius(grid: Sequence[float], dim: int,
                  config: LPConfig | None = None,
                  tol: float = 1e-9,
                  seed_combos: Sequence[GaussianCombo] = ()) -> LPResult:
    """Smallest certified radius over the span of a dictionary grid.

    Grid entries above 1 are family scales; the entry 1 stands for the limit
    profile.  Bisects on R: a trial R is feasible when some combination,
    normalized so the coefficient of its largest active scale equals 1, is
    nonnegative at Chebyshev points of [R, R + x_span].  One scenario per
    choice of dominant scale (larger scales zeroed, smaller ones and the
    limit coefficient free) keeps the dominance invariant linear.  Every
    feasible scenario's witness is re-certified by last_sign_change; the
    discretized LP alone is never trusted.  seed_combos join the candidate
    pool (re-certified like everything else), so a caller can guarantee the
    result is no worse than a combination it already holds.
    """
    cfg = config or LPConfig()
    entries = sorted(set(float(a) for a in grid))
    if not entries:
        raise ValueError("grid must be nonempty")
    if any(a < 1.0 for a in entries):
        raise ValueError("grid entries must be >= 1 (1 selects the limit profile)")
    has_limit = entries[0] == 1.0
    node_as = [a for a in entries if a > 1.0]

    best: tuple[float, GaussianCombo, RadiusCertificate] | None = None

    def consider(combo: GaussianCombo) -> float | None:
        nonlocal best
        try:
            r, cert = last_sign_change(combo, tol)
        except (NegativeAtInfinityError, CertificationError):
            return None
        if best is None or r < best[0]:
            best = (r, combo, cert)
        return r

    for a in node_as:
        consider(GaussianCombo(dim, ((a, 1.0),)))
    if has_limit:
        consider(GaussianCombo(dim, t_limit=1.0))
    for cb in seed_combos:
        if cb.dim != dim:
            raise ValueError("seed combination dimension mismatch")
        consider(cb)
    if best is None:
        raise LPInfeasibleError("infeasible at all R <= X_max")
    if not node_as:
        return LPResult(R=best[0], lp_radius=best[0], combo=best[1],
                        cert=best[2])

    def scenarios(r: float) -> list[GaussianCombo]:
        xs = _chebyshev_points(r, cfg.x_span, cfg.n_points)
        found = []
        cols_cache = {a: _basis_column(a, dim, xs) for a in node_as}
        limit_col = (xs * (xs - dim / 2.0 - 1.0)) if has_limit else None
        for j, a_dom in enumerate(node_as):
            free_as = node_as[:j]
            cols = [cols_cache[a] for a in free_as]
            if limit_col is not None:
                cols.append(limit_col)
            x = _solve_scenario(xs, cols_cache[a_dom], cols, cfg)
            if x is None:
                continue
            nodes = []
            for a, t in zip(free_as, x[: len(free_as)]):
                if abs(t) > 1e-11:
                    nodes.append((a, float(t)))
            nodes.append((a_dom, 1.0))
            t_lim = float(x[len(free_as)]) if limit_col is not None else 0.0
            if abs(t_lim) <= 1e-11:
                t_lim = 0.0
            found.append(GaussianCombo(dim, tuple(nodes), t_limit=t_lim))
        if has_limit and limit_col is not None and float(np.min(limit_col)) >= 0.0:
            found.append(GaussianCombo(dim, t_limit=1.0))
        return found

    # bisection follows certified evidence: a trial R counts as feasible only
    # when some scenario witness re-certifies at a radius achieving it
    r_lo, r_hi = cfg.r_min, best[0]
    while r_hi - r_lo > cfg.r_tol:
        mid = 0.5 * (r_lo + r_hi)
        certified = [consider(cb) for cb in scenarios(mid)]
        if any(r is not None and r <= mid + cfg.r_tol for r in certified):
            r_hi = mid
        else:
            r_lo = mid
    return LPResult(R=best[0], lp_radius=r_hi, combo=best[1], cert=best[2])
