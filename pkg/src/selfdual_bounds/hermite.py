"""Hermite eigenfunctions of the Fourier transform and sign-change search.

The functions psi_n(x) = H_n(sqrt(2 pi) x) exp(-pi x^2), with H_n the
physicists' Hermite polynomials, are Fourier eigenfunctions with eigenvalue
(-i)^n.  Combinations restricted to indices divisible by 4 are therefore
self-dual, and forcing the value at the origin to zero leaves a family whose
last sign change can be read off a polynomial: psi-combinations share the
positive factor exp(-pi x^2), so the sign pattern is that of an even
polynomial p(u) with u = sqrt(2 pi) x, i.e. of q(s) with s = u^2.  The
largest positive real root of q bounds the sign-change radius, and the root
finding is exact up to the companion-matrix eigenvalue solve.

hermite_search minimizes that radius over coefficient vectors by a chained
deterministic pattern search: stage m reuses the stage m-1 optimum as a seed,
which makes the reported minimum weakly decreasing in the number of basis
elements by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .combos import NegativeAtInfinityError

MAX_INDEX = 64


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError("index must be a nonnegative integer")
    if n > MAX_INDEX:
        raise ValueError(f"index above {MAX_INDEX} is not supported")


@lru_cache(maxsize=None)
def _hermite_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of H_n in the power basis, low order first."""
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 2)
    prev2, prev = _hermite_coeffs(n - 2), _hermite_coeffs(n - 1)
    out = [0] * (n + 1)
    for i, c in enumerate(prev):       # 2 x H_{n-1}
        out[i + 1] += 2 * c
    for i, c in enumerate(prev2):      # - 2(n-1) H_{n-2}
        out[i] -= 2 * (n - 1) * c
    return tuple(out)


def hermite_poly(n: int, x):
    """H_n(x) by the three-term recurrence, vectorized over x."""
    _check_index(n)
    xv = np.asarray(x, dtype=float)
    h_prev = np.ones_like(xv)
    if n == 0:
        return float(h_prev) if np.isscalar(x) else h_prev
    h = 2.0 * xv
    for k in range(1, n):
        h, h_prev = 2.0 * xv * h - 2.0 * k * h_prev, h
    return float(h) if np.isscalar(x) else h


def hermite_value_at_zero(n: int) -> int:
    """H_n(0) exactly: 0 for odd n, (-1)^m (2m)!/m! for n = 2m."""
    _check_index(n)
    if n % 2 == 1:
        return 0
    m = n // 2
    return (-1) ** m * math.factorial(2 * m) // math.factorial(m)


def fourier_eigenvalue(n: int) -> complex:
    """Eigenvalue (-i)^n of the Fourier transform on the n-th eigenfunction."""
    _check_index(n)
    return (-1j) ** (n % 4)


def eigenfunction(n: int, x):
    """psi_n(x) = H_n(sqrt(2 pi) x) exp(-pi x^2), vectorized over x."""
    _check_index(n)
    xv = np.asarray(x, dtype=float)
    val = hermite_poly(n, np.sqrt(2.0 * np.pi) * xv) * np.exp(-np.pi * xv * xv)
    return float(val) if np.isscalar(x) else val


@dataclass(frozen=True)
class HermiteCombo:
    """Self-dual combination sum_m coeffs[m] * psi_{4m}.

    Indices run over multiples of 4 only, so the Fourier eigenvalue of every
    term is +1 and the combination equals its own transform.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("need at least one coefficient")
        if 4 * (len(self.coeffs) - 1) > MAX_INDEX:
            raise ValueError("too many basis elements")
        if not all(math.isfinite(c) for c in self.coeffs):
            raise ValueError("coefficients must be finite")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def value(self, x):
        xv = np.asarray(x, dtype=float)
        acc = np.zeros_like(xv)
        for m, c in enumerate(self.coeffs):
            if c != 0.0:
                acc = acc + c * eigenfunction(4 * m, xv)
        return float(acc) if np.isscalar(x) else acc

    def projected(self) -> "HermiteCombo":
        """Adjust the constant term so the combination vanishes at 0."""
        c0 = -sum(c * hermite_value_at_zero(4 * m)
                  for m, c in enumerate(self.coeffs) if m >= 1)
        return HermiteCombo((float(c0),) + self.coeffs[1:])

    def to_json_dict(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @staticmethod
    def from_json_dict(obj: dict) -> "HermiteCombo":
        return HermiteCombo(tuple(float(c) for c in obj["coeffs"]))


@lru_cache(maxsize=None)
def _even_power_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of H_n (n even) as a polynomial in s = u^2."""
    full = _hermite_coeffs(n)
    return tuple(full[0::2])


def combo_radius(combo: HermiteCombo) -> float:
    """Last sign change of a projected combination, as X = pi A^2.

    Builds q(s) = p(sqrt(s)) for the even polynomial p carrying the sign of
    the combination, forces q(0) = 0 (exact after projection, up to float
    rounding), and takes the largest positive real root of q(s)/s.  With
    s = 2 pi x^2 the radius A satisfies pi A^2 = s/2.  Returns 0.0 when q/s
    has no positive real root (no sign change on (0, infinity)).
    """
    q = np.zeros(2 * combo.order + 1)
    for m, c in enumerate(combo.coeffs):
        if c != 0.0:
            ev = _even_power_coeffs(4 * m)
            q[: len(ev)] += c * np.asarray(ev, dtype=float)
    q[0] = 0.0
    # strip exactly-zero leading terms before the sign-at-infinity check
    top = len(q) - 1
    while top > 0 and q[top] == 0.0:
        top -= 1
    if top == 0:
        raise NegativeAtInfinityError("negative at infinity")
    if q[top] < 0.0:
        raise NegativeAtInfinityError("negative at infinity")
    w = q[1: top + 1]            # q(s)/s, low order first
    roots = np.roots(w[::-1])
    best = 0.0
    for z in roots:
        if abs(z.imag) <= 1e-9 * (1.0 + abs(z.real)) and z.real > 1e-12:
            best = max(best, float(z.real))
    return 0.5 * best


@dataclass(frozen=True)
class HermiteSearchConfig:
    n_starts: int = 64          # random restarts per stage
    step0: float = 0.25         # initial pattern-search step
    shrink: float = 0.5
    step_min: float = 1e-10
    screen_step: float = 1e-3   # screening resolution for the restart pool
    n_refine: int = 4           # screened candidates refined to step_min
    max_evals: int = 3000       # per-start objective budget
    seed: int = 0


@dataclass(frozen=True)
class HermiteSearchResult:
    combo: HermiteCombo         # projected optimum
    radius_sq_pi: float         # pi A^2 at the optimum
    A: float                    # radius in x-units
    per_stage: tuple[float, ...]


def _stage_objective(tail: np.ndarray, basis: np.ndarray) -> float:
    """Radius of the projected combination with the given tail, raw arrays.

    Equivalent to combo_radius(HermiteCombo((0,) + tail).projected()) but
    avoids per-evaluation object construction; the projection is exactly the
    statement q[0] = 0.  Trailing zero coefficients reduce the degree, so a
    zero-padded vector scores identically to its unpadded original.
    """
    nz = np.nonzero(tail)[0]
    if nz.size == 0:
        return math.inf
    v = tail if tail[nz[-1]] > 0.0 else -tail
    q = v @ basis
    w = q[1: 2 * (nz[-1] + 1) + 1]
    roots = np.roots(w[::-1])
    best = 0.0
    for z in roots:
        if abs(z.imag) <= 1e-9 * (1.0 + abs(z.real)) and z.real > 1e-12:
            best = max(best, float(z.real))
    return 0.5 * best


def _stage_basis(m: int) -> np.ndarray:
    """Rows: even-power coefficients of H_{4k}, k = 1..m, s^0 column first."""
    basis = np.zeros((m, 2 * m + 1))
    for k in range(1, m + 1):
        ev = _even_power_coeffs(4 * k)
        basis[k - 1, : len(ev)] = ev
    return basis


def _batch_objective(trials: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Objective for a block of tail vectors sharing a nonzero last entry.

    One matmul builds all the reduced polynomials, one stacked eigenvalue
    call extracts every root set; rows with a zero last entry fall back to
    the scalar path (their polynomial degree differs).
    """
    k, m = trials.shape
    out = np.empty(k)
    ok = trials[:, -1] != 0.0
    for i in np.nonzero(~ok)[0]:
        out[i] = _stage_objective(trials[i], basis)
    if not np.any(ok):
        return out
    t = trials[ok] * np.where(trials[ok, -1:] > 0.0, 1.0, -1.0)
    q = t @ basis
    deg = 2 * m - 1                 # degree of q/s; leading coeff > 0
    w = q[:, 1: 2 * m + 1]
    comp = np.zeros((t.shape[0], deg, deg))
    comp[:, np.arange(1, deg), np.arange(deg - 1)] = 1.0
    comp[:, 0, :] = -w[:, deg - 1:: -1] / w[:, deg][:, None]
    roots = np.linalg.eigvals(comp)
    real_ok = (np.abs(roots.imag) <= 1e-9 * (1.0 + np.abs(roots.real))) \
        & (roots.real > 1e-12)
    best = np.max(np.where(real_ok, roots.real, 0.0), axis=1)
    out[ok] = 0.5 * best
    return out


def _pattern_search(v0: np.ndarray, basis: np.ndarray, step0: float,
                    step_min: float, shrink: float, max_evals: int
                    ) -> tuple[np.ndarray, float]:
    """Coordinate pattern search, best-improvement polling, batched sweeps."""
    v = v0.copy()
    f = _stage_objective(v, basis)
    m = v.size
    offsets = np.vstack([np.eye(m), -np.eye(m)])
    step = step0
    evals = 1
    while step >= step_min and evals < max_evals:
        improved = True
        while improved and evals < max_evals:
            trials = v[None, :] + step * offsets
            fs = _batch_objective(trials, basis)
            evals += trials.shape[0]
            i = int(np.argmin(fs))
            improved = fs[i] < f - 1e-13
            if improved:
                v, f = trials[i], float(fs[i])
        step *= shrink
    return v, f


def hermite_search(max_order: int,
                   config: HermiteSearchConfig | None = None
                   ) -> HermiteSearchResult:
    """Minimize the sign-change radius over combinations up to max_order.

    Stage m optimizes the m free tail coefficients (c_1 .. c_m), seeding with
    the zero-padded optimum of stage m-1 plus fresh random unit starts.  The
    restart pool is screened at a coarse step first and only the best few
    candidates (the seed's descendant always among them) are refined to
    step_min, keeping the whole chain fast.  The per-stage random streams
    depend only on the stage index, so a run at a larger max_order replays
    the shorter run's stages exactly and the result is weakly decreasing in
    max_order.
    """
    if not isinstance(max_order, int) or max_order < 1:
        raise ValueError("max_order must be an integer >= 1")
    if 4 * max_order > MAX_INDEX:
        raise ValueError("too many basis elements")
    cfg = config or HermiteSearchConfig()

    best_tail: np.ndarray | None = None
    best_f = math.inf
    per_stage: list[float] = []
    for m in range(1, max_order + 1):
        basis = _stage_basis(m)
        if m == 1:
            starts = [np.ones(1)]
        else:
            assert best_tail is not None
            starts = [np.concatenate([best_tail,
                                      np.zeros(m - len(best_tail))])]
        rng = np.random.default_rng(cfg.seed + m)
        for _ in range(cfg.n_starts):
            v = rng.normal(size=m)
            norm = float(np.linalg.norm(v))
            if norm > 0:
                starts.append(v / norm)
        screened = [
            _pattern_search(np.asarray(v0, dtype=float), basis, cfg.step0,
                            cfg.screen_step, cfg.shrink, cfg.max_evals // 4)
            for v0 in starts]
        order = sorted(range(len(screened)), key=lambda i: screened[i][1])
        refine_ids = {0} | set(order[: cfg.n_refine])  # 0 = chained seed
        stage_best: tuple[np.ndarray, float] | None = None
        for i in sorted(refine_ids):
            v, f = _pattern_search(screened[i][0], basis,
                                   max(cfg.screen_step * 4, cfg.step_min),
                                   cfg.step_min, cfg.shrink, cfg.max_evals)
            if stage_best is None or f < stage_best[1]:
                stage_best = (v, f)
        assert stage_best is not None
        if stage_best[1] < best_f:
            best_tail, best_f = stage_best
        if best_tail is not None and len(best_tail) < m:
            best_tail = np.concatenate(
                [best_tail, np.zeros(m - len(best_tail))])
        per_stage.append(best_f)

    assert best_tail is not None
    v = best_tail
    lead = next((c for c in v[::-1] if c != 0.0), 1.0)
    if lead < 0:
        v = -v
    combo = HermiteCombo((0.0,) + tuple(float(c) for c in v)).projected()
    return HermiteSearchResult(combo=combo, radius_sq_pi=best_f,
                               A=math.sqrt(best_f / math.pi),
                               per_stage=tuple(per_stage))
