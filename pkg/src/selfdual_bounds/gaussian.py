"""Self-dual Gaussian family and its sign-change radius.

For a > 1 and dimension d, the radial function

    g_a(x) = a^d gamma(a x) + gamma(x / a) - (1 + a^d) gamma(x),
    gamma(x) = e^{-pi |x|^2},

is its own Fourier transform (kernel e^{-2 i pi x.y}) and integrates to
g_a(0) = 0.  In the rescaled variable X = pi |x|^2 its profile is

    G_a(X) = a^d e^{-X a^2} + e^{-X a^{-2}} - (1 + a^d) e^{-X},

and the sign pattern of g_a is that of H_a(X) = e^X G_a(X).  H_a is convex,
vanishes at 0 with negative slope, and tends to +infinity, so it has a unique
positive root X_a; the radius beyond which g_a stays nonnegative is then
A(g_a) = sqrt(X_a / pi).  This module evaluates the family and solves for X_a
by safeguarded bisection.  All floating point is binary64; exact coefficient
work lives in series.py.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class RootBracketError(RuntimeError):
    """Bracket expansion hit the X ceiling; parameters are pathological."""


@dataclass(frozen=True)
class GaussianParams:
    """Scale a > 1 and dimension d >= 1 of one family member."""

    a: float
    dim: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dim must be an integer >= 1, got {self.dim!r}")
        if not math.isfinite(self.a) or self.a <= 1.0:
            raise ValueError(f"a must be finite and exceed 1, got {self.a!r}")

    @property
    def c(self) -> float:
        return self.dim / 2.0

    @property
    def k(self) -> float:
        return self.a * self.a - 1.0

    @property
    def h(self) -> float:
        return self.a - 1.0


def eval_g(params: GaussianParams, x_norm: float) -> float:
    """g_a at radius |x| = x_norm, via the X-domain profile G_a(pi x^2)."""
    if not math.isfinite(x_norm):
        raise ValueError("x_norm must be finite")
    a, d = params.a, params.dim
    X = math.pi * x_norm * x_norm
    ad = a ** d
    return (ad * math.exp(-X * a * a) + math.exp(-X / (a * a))
            - (1.0 + ad) * math.exp(-X))


def eval_H(params: GaussianParams, X: float) -> float:
    """e^X-rescaled profile a^d e^{(1-a^2)X} + e^{(1-a^{-2})X} - 1 - a^d.

    Written as a^d expm1((1-a^2)X) + expm1((1-a^{-2})X): the identity is
    exact and the expm1 form stays fully accurate as a -> 1, where both
    exponents vanish and the naive form loses all digits to cancellation.
    It also forces H(0) = 0 exactly.
    """
    if X < 0:
        raise ValueError("X must be nonnegative")
    a, d = params.a, params.dim
    ad = a ** d
    return ad * math.expm1((1.0 - a * a) * X) + math.expm1((1.0 - a ** -2) * X)


def eval_H_deriv(params: GaussianParams, X: float) -> float:
    """dH/dX = a^d (1-a^2) e^{(1-a^2)X} + (1-a^{-2}) e^{(1-a^{-2})X}."""
    a, d = params.a, params.dim
    ad = a ** d
    return (ad * (1.0 - a * a) * math.exp((1.0 - a * a) * X)
            + (1.0 - a ** -2) * math.exp((1.0 - a ** -2) * X))


def solve_Xa(params: GaussianParams, tol: float = 1e-12,
             x_ceiling: float = 1e6) -> float:
    """Unique positive root of H_a, to absolute tolerance tol.

    Bisection on [tol, X_hi] with X_hi grown geometrically from max(4, d)
    until H > 0 (convexity makes the bracket sound), then a few Newton steps
    clamped to the bracket.  Raises RootBracketError if the expansion passes
    x_ceiling.
    """
    if not 0.0 < tol < 1.0:
        raise ValueError("tol must lie in (0, 1)")
    lo = tol
    if eval_H(params, lo) >= 0.0:
        # the root is below tol; only possible for extreme parameters
        raise RootBracketError("profile is nonnegative at the lower bracket")
    hi = float(max(4, params.dim))
    while eval_H(params, hi) <= 0.0:
        hi *= 2.0
        if hi > x_ceiling:
            raise RootBracketError(
                f"no sign change below X = {x_ceiling:g}; parameters are "
                "pathological")
    while hi - lo > 0.25 * tol:
        mid = 0.5 * (lo + hi)
        if eval_H(params, mid) < 0.0:
            lo = mid
        else:
            hi = mid
    # Newton polish; convexity keeps the iteration inside the final bracket.
    x = 0.5 * (lo + hi)
    for _ in range(4):
        dh = eval_H_deriv(params, x)
        if dh <= 0.0:
            break
        step = eval_H(params, x) / dh
        x = min(max(x - step, lo), hi)
    return x


def radius_from_X(X: float) -> float:
    """Radius sqrt(X / pi) matching X = pi r^2."""
    if X < 0:
        raise ValueError("X must be nonnegative")
    return math.sqrt(X / math.pi)


def limit_profile(dim: int, X: float) -> float:
    """Normalized a -> 1 direction of the family: L(X) = X (X - d/2 - 1).

    This is the k^2 Taylor coefficient of H_a at k = a^2 - 1 = 0; its root
    structure (negative on (0, d/2+1), positive beyond) is the limiting sign
    pattern of the family and serves as an extra basis element in the
    combination searches.
    """
    return X * (X - dim / 2.0 - 1.0)


def minimize_family(dim: int, a_hi: float = 16.0,
                    tol: float = 1e-10) -> tuple[float | None, float]:
    """Minimize X_a over a for fixed dimension.

    Returns (a_star, X_star).  When the infimum is attained in the a -> 1
    limit rather than at an interior scale (the case for every d >= 2),
    a_star is None and X_star = d/2 + 1, the root of the limit profile.
    """
    lo, hi = 1.0 + 1e-6, a_hi
    inv_gr = (math.sqrt(5.0) - 1.0) / 2.0

    def xa(a: float) -> float:
        return solve_Xa(GaussianParams(a, dim))

    x1 = hi - inv_gr * (hi - lo)
    x2 = lo + inv_gr * (hi - lo)
    f1, f2 = xa(x1), xa(x2)
    while hi - lo > tol:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - inv_gr * (hi - lo)
            f1 = xa(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + inv_gr * (hi - lo)
            f2 = xa(x2)
    a_star = 0.5 * (lo + hi)
    x_star = xa(a_star)
    x_limit = dim / 2.0 + 1.0
    if x_limit <= x_star:
        return None, x_limit
    return a_star, x_star


def scan_family(dim: int, a_min: float, a_max: float, steps: int,
                workers: int = 1) -> list[tuple[float, float, float]]:
    """Table of (a, X_a, A(g_a)) on a uniform a-grid, for the CLI.

    Rows are independent, so they may be solved across threads; the returned
    order is the grid order regardless of scheduling.
    """
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if not 1.0 < a_min < a_max:
        raise ValueError("need 1 < a_min < a_max")
    grid = [a_min + (a_max - a_min) * i / (steps - 1) for i in range(steps)]

    def row(a: float) -> tuple[float, float, float]:
        x = solve_Xa(GaussianParams(a, dim))
        return a, x, radius_from_X(x)

    if workers <= 1:
        return [row(a) for a in grid]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(row, grid))
