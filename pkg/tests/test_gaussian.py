"""Family profile evaluation, root finding, limits, and the direct minimizer."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selfdual_bounds.gaussian import (GaussianParams, eval_H, eval_H_deriv,
                                      eval_g, limit_profile, minimize_family,
                                      radius_from_X, scan_family, solve_Xa)


def closed_form_sqrt2_root() -> float:
    # at a = sqrt(2) the profile root satisfies a cubic in e^{X/2} whose
    # relevant solution is q = (sqrt(2)/2)(1 + sqrt(1 + 2 sqrt(2)))
    q = (math.sqrt(2.0) / 2.0) * (1.0 + math.sqrt(1.0 + 2.0 * math.sqrt(2.0)))
    return 2.0 * math.log(q)


class TestSolveXa:
    def test_a2_d1(self):
        x = solve_Xa(GaussianParams(2.0, 1))
        assert abs(x - 1.453411858637048) < 1e-10

    def test_sqrt2_closed_form(self):
        x = solve_Xa(GaussianParams(math.sqrt(2.0), 1))
        assert abs(x - closed_form_sqrt2_root()) < 1e-11

    def test_root_is_a_root_and_unique_crossing(self):
        for a in (1.3, 2.0, 5.0):
            params = GaussianParams(a, 1)
            x = solve_Xa(params)
            assert abs(eval_H(params, x)) < 1e-9
            assert eval_H(params, 0.5 * x) < 0.0
            assert eval_H(params, 2.0 * x) > 0.0

    def test_limits_approach_half_dim_plus_one(self):
        for d in (1, 2, 3, 8):
            x = solve_Xa(GaussianParams(1.0 + 1e-4, d))
            assert abs(x - (d / 2.0 + 1.0)) < 1e-2

    def test_dim2_stays_above_limit_value(self):
        # the quartic correction term is negative at the limit root for
        # d = 2, so every family member sits strictly above it
        for a in np.linspace(1.0 + 3e-2, 4.0, 100):
            assert solve_Xa(GaussianParams(float(a), 2)) > 2.0

    def test_tol_validation(self):
        with pytest.raises(ValueError):
            solve_Xa(GaussianParams(2.0, 1), tol=0.0)
        with pytest.raises(ValueError):
            solve_Xa(GaussianParams(2.0, 1), tol=2.0)


class TestParamsValidation:
    def test_a_must_exceed_one(self):
        with pytest.raises(ValueError):
            GaussianParams(1.0, 1)
        with pytest.raises(ValueError):
            GaussianParams(0.5, 1)

    def test_dim_positive_integer(self):
        with pytest.raises(ValueError):
            GaussianParams(2.0, 0)

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            GaussianParams(math.inf, 1)
        with pytest.raises(ValueError):
            eval_g(GaussianParams(2.0, 1), math.nan)
        with pytest.raises(ValueError):
            eval_H(GaussianParams(2.0, 1), -0.5)


class TestProfileForms:
    @given(st.floats(min_value=1.01, max_value=8.0),
           st.floats(min_value=0.0, max_value=3.0),
           st.integers(min_value=1, max_value=4))
    def test_H_is_rescaled_g(self, a, x, d):
        # H(X) = e^X g(x) with X = pi x^2
        params = GaussianParams(a, d)
        big_x = math.pi * x * x
        lhs = eval_H(params, big_x)
        rhs = math.exp(big_x) * eval_g(params, x)
        assert abs(lhs - rhs) <= 1e-11 * (1.0 + abs(lhs))

    def test_H_zero_at_origin_exactly(self):
        for a in (1.0001, 1.5, 3.0):
            assert eval_H(GaussianParams(a, 1), 0.0) == 0.0

    @given(st.floats(min_value=1.05, max_value=6.0),
           st.floats(min_value=0.01, max_value=8.0))
    @settings(max_examples=60)
    def test_derivative_matches_finite_difference(self, a, x):
        params = GaussianParams(a, 2)
        h = 1e-6 * max(1.0, x)
        fd = (eval_H(params, x + h) - eval_H(params, x - h)) / (2.0 * h)
        assert abs(eval_H_deriv(params, x) - fd) <= 1e-4 * (1.0 + abs(fd))

    @given(st.floats(min_value=1.05, max_value=6.0),
           st.floats(min_value=0.0, max_value=10.0),
           st.floats(min_value=0.01, max_value=2.0),
           st.integers(min_value=1, max_value=3))
    @settings(max_examples=80)
    def test_profile_is_convex(self, a, x, gap, d):
        # midpoint second difference of a convex function is nonnegative
        params = GaussianParams(a, d)
        second = (eval_H(params, x) + eval_H(params, x + 2.0 * gap)
                  - 2.0 * eval_H(params, x + gap))
        scale = max(1.0, abs(eval_H(params, x + 2.0 * gap)))
        assert second >= -1e-9 * scale


class TestLimitProfile:
    def test_values(self):
        assert limit_profile(1, 1.5) == 0.0
        assert limit_profile(2, 2.0) == 0.0
        assert limit_profile(1, 1.0) < 0.0
        assert limit_profile(1, 2.0) > 0.0

    def test_radius_conversion(self):
        assert radius_from_X(math.pi) == pytest.approx(1.0)


class TestMinimizeFamily:
    def test_d1_interior_minimum(self):
        a_star, x_star = minimize_family(1)
        assert a_star is not None
        assert abs(a_star - 1.88966939389244) < 1e-6
        assert abs(x_star - 1.45199915591385) < 1e-9
        # stationarity: neighbors on both sides are worse
        assert solve_Xa(GaussianParams(a_star - 1e-3, 1)) > x_star
        assert solve_Xa(GaussianParams(a_star + 1e-3, 1)) > x_star

    def test_reference_scale_nearby(self):
        # the approximate stationarity root 2.08137 gives a value close to,
        # but measurably above, the direct minimum
        x_ref = solve_Xa(GaussianParams(2.08137, 1))
        assert abs(x_ref - 1.45623446459063) < 1e-9

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_higher_dims_minimize_at_limit(self, d):
        a_star, x_star = minimize_family(d)
        assert a_star is None
        assert x_star == pytest.approx(d / 2.0 + 1.0, abs=1e-12)


class TestScan:
    def test_rows_and_determinism(self):
        rows = scan_family(1, 1.5, 3.0, 7)
        assert len(rows) == 7
        assert rows[0][0] == 1.5 and rows[-1][0] == 3.0
        threaded = scan_family(1, 1.5, 3.0, 7, workers=4)
        assert rows == threaded

    def test_validation(self):
        with pytest.raises(ValueError):
            scan_family(1, 1.5, 3.0, 1)
        with pytest.raises(ValueError):
            scan_family(1, 0.9, 3.0, 5)
        with pytest.raises(ValueError):
            scan_family(1, 3.0, 1.5, 5)
