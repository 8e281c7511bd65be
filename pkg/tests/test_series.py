"""Exact-rational series identities: every assertion here is bit-exact."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selfdual_bounds.gaussian import GaussianParams, eval_H
from selfdual_bounds.series import (RationalPolynomial, linear_exp_coeff,
                                    p56_check, q4_polynomial, residue_q,
                                    run_identity_checks, substitute_k_of_h,
                                    taylor_h_d1, taylor_k_general)

F = Fraction


def poly(*coeffs) -> RationalPolynomial:
    return RationalPolynomial.from_coefficients([F(c) for c in coeffs])


class TestHSeries:
    def test_orders_zero_and_one_vanish(self):
        series = taylor_h_d1(order=4)
        assert series[0].is_zero
        assert series[1].is_zero

    def test_order_two_is_2X_2Xm3(self):
        # 2X(2X-3) = -6X + 4X^2
        assert taylor_h_d1(order=4)[2] == poly(0, -6, 4)

    def test_order_three_is_minus_X_2Xm3(self):
        # -X(2X-3) = 3X - 2X^2
        assert taylor_h_d1(order=4)[3] == poly(0, 3, -2)

    def test_order_four_at_three_halves(self):
        p4 = taylor_h_d1(order=4)[4]
        assert p4(F(3, 2)) == F(3, 2)

    def test_order_validation(self):
        with pytest.raises(ValueError):
            taylor_h_d1(order=9)
        with pytest.raises(ValueError):
            taylor_h_d1(order=-1)


class TestKSeries:
    @pytest.mark.parametrize("c", [F(1, 2), F(1), F(3, 2), F(2), F(7, 2)])
    def test_order_two_matches_limit_profile(self, c):
        # P2 = X(X - c - 1)
        expected = poly(0, -(c + 1), 1)
        assert taylor_k_general(c, order=4)[2] == expected

    @pytest.mark.parametrize("c", [F(1, 2), F(1), F(3, 2), F(2), F(7, 2)])
    def test_order_three_relation(self, c):
        # P3 = (1/2)(c-2) X(X-c-1)
        expected = poly(0, -(c + 1), 1).scaled(F(c - 2, 2))
        assert taylor_k_general(c, order=4)[3] == expected

    @pytest.mark.parametrize("c", [F(1, 2), F(1), F(3, 2), F(2), F(7, 2)])
    def test_q4_at_limit_root(self, c):
        # Q4(c+1) = 1 - c^2
        assert q4_polynomial(c)(c + 1) == 1 - c * c

    def test_c_validation(self):
        with pytest.raises(ValueError):
            taylor_k_general(F(0), order=4)
        with pytest.raises(ValueError):
            taylor_k_general(F(-1, 2), order=4)


class TestCrossParametrization:
    def test_half_integer_c_reproduces_h_series(self):
        # composing the k-form at c = 1/2 with k = 2h + h^2 must reproduce
        # the h-form coefficient by coefficient through order 4
        k_series = taylor_k_general(F(1, 2), order=4)
        composed = substitute_k_of_h(k_series, order=4)
        direct = taylor_h_d1(order=4)
        for n in range(5):
            assert composed[n] == direct[n], f"mismatch at h^{n}"


class TestResidues:
    def test_q0_is_one(self):
        assert residue_q(0) == 1

    def test_q5_explicit_five_term_sum(self):
        # 2^5/5! - 4*2^4/4! + 6*2^3/3! - 4*2^2/2! + 2, summed exactly
        expected = (F(2 ** 5, 120) - 4 * F(2 ** 4, 24) + 6 * F(2 ** 3, 6)
                    - 4 * F(2 ** 2, 2) + 2)
        assert expected == F(-2, 5)
        assert residue_q(5) == F(-2, 5)

    def test_q6(self):
        assert residue_q(6) == F(4, 45)

    def test_linear_exp_part(self):
        # (-2)^n/n! + (-2)^(n-1)/(n-1)! at n = 5 is 2/5
        assert linear_exp_coeff(5) == F(2, 5)

    def test_p5_p6(self):
        p5, p6 = p56_check()
        assert p5 == 0
        assert p6 == F(-4, 45)


class TestIdentityRunner:
    def test_all_checks_pass(self):
        checks = run_identity_checks(order=6)
        assert checks, "no checks ran"
        failed = [c.name for c in checks if not c.ok]
        assert not failed, f"failed identities: {failed}"

    def test_every_result_is_exact_rational_text(self):
        for check in run_identity_checks(order=6):
            assert isinstance(check.expected, str)
            assert isinstance(check.actual, str)


rationals = st.fractions(min_value=-10, max_value=10,
                         max_denominator=50)


class TestPolynomialRing:
    @given(st.lists(rationals, min_size=1, max_size=5),
           st.lists(rationals, min_size=1, max_size=5),
           rationals)
    def test_product_evaluates_pointwise(self, a, b, x):
        pa = RationalPolynomial.from_coefficients(a)
        pb = RationalPolynomial.from_coefficients(b)
        assert (pa * pb)(x) == pa(x) * pb(x)

    @given(st.lists(rationals, min_size=1, max_size=5),
           st.lists(rationals, min_size=1, max_size=5),
           rationals)
    def test_sum_evaluates_pointwise(self, a, b, x):
        pa = RationalPolynomial.from_coefficients(a)
        pb = RationalPolynomial.from_coefficients(b)
        assert (pa + pb)(x) == pa(x) + pb(x)

    @given(st.lists(rationals, min_size=1, max_size=6))
    def test_trailing_zeros_canonical(self, a):
        pa = RationalPolynomial.from_coefficients(a)
        padded = RationalPolynomial.from_coefficients(list(a) + [F(0)] * 3)
        assert pa == padded


class TestNumericConsistency:
    # the order-4 truncation of the k-form should match the float profile to
    # O(k^5); the constant is fitted on a fixed grid and then enforced with
    # headroom on random draws
    @staticmethod
    def _truncation_error(a: float, x: float) -> tuple[float, float]:
        series = taylor_k_general(F(1, 2), order=4)
        k = a * a - 1.0
        approx = 0.0
        for n in range(5):
            horner = 0.0
            for coef in reversed(series[n].coefficients):
                horner = horner * x + float(coef)
            approx += horner * k ** n
        exact = eval_H(GaussianParams(a, 1), x)
        return abs(approx - exact), abs(k) ** 5

    def test_fitted_constant_is_stable(self):
        fit = 0.0
        for i in range(20):
            a = 1.0 + 1e-3 + (0.1 - 1e-3) * i / 19
            x = 0.3 + 3.0 * ((i * 7) % 20) / 19
            err, k5 = self._truncation_error(a, x)
            fit = max(fit, err / k5)
        assert fit > 0.0

        # enforce on a shifted sample set with 2x headroom
        for i in range(20):
            a = 1.0 + 2e-3 + (0.09 - 2e-3) * i / 19
            x = 0.5 + 2.5 * ((i * 11) % 20) / 19
            err, k5 = self._truncation_error(a, x)
            assert err <= 2.0 * fit * k5


@settings(max_examples=50)
@given(st.integers(min_value=0, max_value=12))
def test_residue_matches_direct_series_expansion(n):
    # coefficient of w^n in (1-w)^(n-1) e^{2w}: expand both factors exactly
    from math import comb, factorial
    total = F(0)
    for j in range(n + 1):
        # w^j coefficient of e^{2w} is 2^j/j!; w^(n-j) of (1-w)^(n-1) is
        # comb(n-1, n-j)(-1)^(n-j) for integer exponent n-1 >= n-j, except
        # n = 0 where the exponent -1 gives the geometric series
        if n == 0:
            binom = F(1) if j == 0 else F(0)
        elif n - j <= n - 1:
            binom = F(comb(n - 1, n - j) * (-1) ** (n - j))
        else:
            binom = F(0)
        total += binom * F(2 ** j, factorial(j))
    assert residue_q(n) == total
