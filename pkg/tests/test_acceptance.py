"""Acceptance gate: one printed PASS/FAIL line per criterion.

Each criterion runs at its stated tolerance and runtime budget and prints
exactly one line (run pytest with -s to watch them stream).  A criterion
that cannot be met by the implementation fails plainly here; the blocking
analysis lives in the design notes, not in a weakened assertion.
"""

import math
import time
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import j0

from selfdual_bounds.bounds import (ceiling, lambda_const, lower_bound_d1,
                                    lower_bound_volume, upper_bound_assembly)
from selfdual_bounds.combos import (GaussianCombo, LPConfig, combo_H,
                                    last_sign_change, lp_min_radius,
                                    minimize_correction)
from selfdual_bounds.gaussian import GaussianParams, eval_g, minimize_family, solve_Xa
from selfdual_bounds.hermite import (HermiteCombo, combo_radius,
                                     eigenfunction, hermite_search)
from selfdual_bounds.number_fields import (CERTIFIED, NumberFieldParams,
                                           prop1_margin, root_discriminant,
                                           tower)
from selfdual_bounds.series import (RationalPolynomial, p56_check,
                                    q4_polynomial, substitute_k_of_h,
                                    taylor_h_d1, taylor_k_general)

F = Fraction
TWO_PI_E = 2.0 * math.pi * math.e


@contextmanager
def criterion(tag: str, label: str, budget_s: float):
    t0 = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < budget_s, (
            f"runtime {elapsed:.3f} s exceeds the {budget_s:g} s budget")
    except BaseException:
        print(f"criterion {tag}: FAIL ({label})")
        raise
    print(f"criterion {tag}: PASS ({label}) [{elapsed * 1e3:.1f} ms]")


@lru_cache(maxsize=None)
def _lp_reference():
    return lp_min_radius((1.0, 2.0, 2.08, 3.0), 1)


@lru_cache(maxsize=None)
def _hermite_chain():
    return hermite_search(4)


def test_criterion_01_lambda_constants():
    with criterion("1", "lambda constants and refined d=1 lower bound", 0.010):
        lam = lambda_const()
        assert abs(lam - 0.2172) <= 1e-4
        a_min, b1 = lower_bound_d1()
        assert abs(a_min - 0.4107) <= 1e-4
        assert abs(b1 - 0.1687) <= 1e-4


def test_criterion_02_single_family_radii():
    with criterion("2", "single-member roots at a=2 and a=sqrt(2)", 1.0):
        t0 = time.perf_counter()
        x2 = solve_Xa(GaussianParams(2.0, 1))
        assert time.perf_counter() - t0 < 0.010
        assert abs(x2 - 1.4534) <= 1e-3

        q = (math.sqrt(2.0) / 2.0) * (1.0 + math.sqrt(1.0 + 2.0 * math.sqrt(2.0)))
        closed_form = 2.0 * math.log(q)
        t0 = time.perf_counter()
        xs = solve_Xa(GaussianParams(math.sqrt(2.0), 1))
        assert time.perf_counter() - t0 < 0.010
        assert abs(xs - closed_form) <= 1e-4
        assert abs(xs - 1.4749) <= 1e-2   # looser printed reference


def test_criterion_03_small_a_limits():
    with criterion("3", "a -> 1 limits and d=2 positivity grid", 1.0):
        for d in (1, 2, 3, 8):
            x = solve_Xa(GaussianParams(1.0 + 1e-4, d))
            assert abs(x - (d / 2.0 + 1.0)) <= 1e-2
        for k in range(1, 101):
            a = 1.0 + 3.0 * k / 100.0
            assert solve_Xa(GaussianParams(a, 2)) > 2.0


def test_criterion_04_minimizer_location():
    with criterion("4", "direct d=1 minimizer inside [2.0, 2.15]", 1.0):
        a_star, x_star = minimize_family(1)
        assert a_star is not None
        assert 2.0 <= a_star <= 2.15, (
            f"direct minimizer a* = {a_star:.11f} (profile root "
            f"{x_star:.11f}) lies outside [2.0, 2.15]; the reference scale "
            f"2.08137 solves an approximate stationarity condition, not the "
            f"exact one (see design notes)")


def test_criterion_05_exact_series():
    with criterion("5", "bit-exact series identities", 0.100):
        h = taylor_h_d1(order=4)
        assert h[1].is_zero
        assert list(h[2].coefficients) == [F(0), F(-6), F(4)]
        assert list(h[3].coefficients) == [F(0), F(3), F(-2)]
        assert h[4](F(3, 2)) == F(3, 2)

        for c in (F(1, 2), F(1), F(3, 2), F(2), F(7, 2)):
            k = taylor_k_general(c, order=4)
            # X (X - c - 1) and (c-2)/2 X (X - c - 1); comparison through
            # the polynomial type so the canonical zero at c = 2 matches
            base = RationalPolynomial.from_coefficients([F(0), -(c + 1), F(1)])
            assert k[2] == base
            assert k[3] == base.scaled((c - 2) / 2)
            assert q4_polynomial(c)(c + 1) == 1 - c * c

        k_half = taylor_k_general(F(1, 2), order=4)
        composed = substitute_k_of_h(k_half, order=4)
        direct = taylor_h_d1(order=4)
        for n in range(5):
            assert composed[n] == direct[n]

        assert p56_check() == (F(0), F(-4, 45))


def test_criterion_06_hermite_chain():
    with criterion("6", "two-mode combination and monotone search chain", 5.0):
        exact = combo_radius(HermiteCombo((0.0, 1.0)).projected())
        assert abs(exact - 1.5) <= 1e-9
        assert exact <= 3.0
        res = _hermite_chain()
        assert res.per_stage[0] == pytest.approx(1.5, abs=1e-9)
        for earlier, later in zip(res.per_stage, res.per_stage[1:]):
            assert later <= earlier + 1e-12


def test_criterion_07a_lp_radius():
    with criterion("7a", "certified LP radius over the reference grid", 60.0):
        res = _lp_reference()
        assert res.R / math.pi <= 0.41
        assert math.sqrt(res.R / math.pi) <= 0.64


def test_criterion_07b_correction_reference():
    with criterion("7b", "correction radius against the 1.25 reference", 60.0):
        cor = minimize_correction(2.0, 1)
        assert abs(cor.R - 1.25) <= 0.04, (
            f"certified optimal radius {cor.R:.11f} differs from the loose "
            f"reference 1.25 by {abs(cor.R - 1.25):.4f} > 0.04; the "
            f"reference matches a suboptimal correction coefficient, not "
            f"the cap (see design notes)")


def test_criterion_08_volume_bounds_and_ceiling():
    # the d=1 search results are charged to their own criteria budgets
    _lp_reference()
    _hermite_chain()
    with criterion("8", "volume lower bounds and the analytic ceiling", 1.0):
        assert lower_bound_volume(1) == 0.0625
        for d in range(1, 65):
            assert lower_bound_volume(d) > d / TWO_PI_E
        for d in range(1, 17):
            cap = ceiling(d) + 1e-9
            for effort in ("family", "correction"):
                rep = upper_bound_assembly(d, effort)
                assert rep.upper <= cap
        assert _lp_reference().R / math.pi <= ceiling(1) + 1e-9
        assert _hermite_chain().radius_sq_pi / math.pi <= ceiling(1) + 1e-9


def test_criterion_09_self_duality_quadrature():
    with criterion("9", "quadratured transforms match originals", 5.0):
        pts = np.linspace(0.0, 3.0, 50)

        def cosine_transform(f, y):
            val, _ = quad(lambda x: f(x) * math.cos(2.0 * math.pi * x * y),
                          0.0, 12.0, limit=300, epsabs=1e-12, epsrel=1e-12)
            return 2.0 * val

        g1 = GaussianParams(2.0, 1)
        for y in pts:
            err = cosine_transform(lambda x: eval_g(g1, x), float(y)) \
                - eval_g(g1, float(y))
            assert abs(err) <= 1e-8

        g2 = GaussianParams(2.0, 2)
        for r in np.linspace(0.0, 2.5, 50):
            val, _ = quad(lambda s: eval_g(g2, s)
                          * j0(2.0 * math.pi * float(r) * s) * s,
                          0.0, 12.0, limit=300, epsabs=1e-12, epsrel=1e-12)
            assert abs(2.0 * math.pi * val - eval_g(g2, float(r))) <= 1e-8

        for y in pts:
            err = cosine_transform(lambda x: eigenfunction(4, x), float(y)) \
                - eigenfunction(4, float(y))
            assert abs(err) <= 1e-8


def test_criterion_10_field_calculators():
    with criterion("10", "discriminant margins and tower invariance", 0.100):
        value, verdict = prop1_margin(NumberFieldParams(1, 1),
                                      3.0 / (2.0 * math.pi))
        assert value == 1.0
        assert verdict == CERTIFIED

        rd0 = root_discriminant(NumberFieldParams(8, 117 ** 4))
        for m in range(0, 7):
            lvl = tower(8, 117 ** 4, 2, m)
            rd = root_discriminant(NumberFieldParams(lvl.degree, lvl.disc))
            assert abs(math.log(rd) - math.log(rd0)) <= 1e-12

        prev = math.inf
        for disc in range(2, 400, 13):
            val, _ = prop1_margin(NumberFieldParams(3, disc), 0.5)
            assert val < prev
            prev = val


def test_criterion_11_property_suites():
    with criterion("11", "sampled invariants at million-sample budgets", 120.0):
        rng = np.random.default_rng(20260816)

        # positive-scaling invariance of certified radii
        bases = []
        for a in (1.35, 1.5, 2.0, 2.6, 3.3, 4.2):
            bases.append(GaussianCombo(1, ((a, 1.0),)))
            bases.append(GaussianCombo(2, ((a, 1.0),)))
        bases += [
            GaussianCombo(1, ((1.7, 0.83), (2.4, 1.0)), t_limit=-0.37),
            GaussianCombo(1, ((2.0, 1.0),), t_limit=-1.2),
            GaussianCombo(2, ((1.6, -0.2), (2.8, 1.0)), t_limit=0.4),
            GaussianCombo(3, ((2.2, 1.0),), t_limit=0.05),
            GaussianCombo(1, t_limit=1.0),
            GaussianCombo(2, ((1.9, 2.5), (3.1, 0.7))),
            GaussianCombo(1, ((1.4, 0.3), (2.1, -0.1), (3.0, 1.0))),
            GaussianCombo(2, ((2.5, 1.0),), t_limit=-0.8),
        ]
        scaling_samples = 0
        for combo in bases:
            r0, cert0 = last_sign_change(combo)
            scaling_samples += cert0.samples_checked
            for factor in (2.0 ** -15, 1.0 / 1024.0, 0.477, 8.0,
                           117.0, 3917.25):
                r1, cert1 = last_sign_change(combo.scaled(factor))
                scaling_samples += cert1.samples_checked
                assert abs(r1 - r0) <= 1e-9 * (1.0 + r0)
        assert scaling_samples >= 1_000_000

        # LP grid monotonicity under nesting
        fast = LPConfig(n_points=400, r_tol=1e-3)
        chain = [(2.0,), (1.0, 2.0), (1.0, 2.0, 3.0), (1.0, 1.5, 2.0, 3.0)]
        radii = [lp_min_radius(g, 1, config=fast).R for g in chain]
        for earlier, later in zip(radii, radii[1:]):
            assert later <= earlier + 2e-3

        # certificate soundness: certified regions sampled uniformly
        soundness_samples = 0
        witnesses = [_lp_reference().combo, minimize_correction(2.0, 1).combo,
                     GaussianCombo(1, ((2.0, 1.0),)),
                     GaussianCombo(2, ((1.6, -0.2), (2.8, 1.0)), t_limit=0.4),
                     GaussianCombo(1, t_limit=1.0)]
        for combo in witnesses:
            r, cert = last_sign_change(combo)
            xs = rng.uniform(r, cert.X_tail, size=220_000)
            vals = combo_H(combo, xs)
            scale = float(np.max(np.abs(vals))) + 1.0
            assert float(np.min(vals)) >= -1e-12 * scale
            soundness_samples += xs.size
        assert soundness_samples >= 1_000_000

        # convexity of the rescaled profile, sampled in second differences
        convexity_evals = 0
        for a, d in ((1.1, 1), (1.5, 1), (2.0, 1), (3.5, 1),
                     (1.3, 2), (2.4, 2), (1.8, 3), (2.9, 3)):
            single = GaussianCombo(d, ((a, 1.0),))
            x = rng.uniform(0.0, 10.0, size=45_000)
            gap = rng.uniform(1e-3, 2.0, size=45_000)
            f0 = combo_H(single, x)
            f1 = combo_H(single, x + gap)
            f2 = combo_H(single, x + 2.0 * gap)
            convexity_evals += 3 * x.size
            scale = np.maximum(1.0, np.abs(f2))
            assert float(np.min((f0 + f2 - 2.0 * f1) / scale)) >= -1e-9
        assert convexity_evals >= 1_000_000
