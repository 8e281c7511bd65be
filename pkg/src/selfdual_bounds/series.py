"""Exact rational Taylor expansions of the rescaled family profile.

The profile H_a(X) = a^d e^{(1-a^2)X} + e^{(1-a^{-2})X} - 1 - a^d admits two
small-parameter expansions around the degenerate point a = 1:

* in h = a - 1 with d = 1:   H = P_1 h + P_2 h^2 + P_3 h^3 + P_4 h^4 + O(h^5),
* in k = a^2 - 1 with c = d/2 general:
                             H = P_1 k + P_2 k^2 + P_3 k^3 + P_4 k^4 + O(k^5),

where every P_n is a polynomial in X with rational coefficients.  This module
recomputes those polynomials by exact rational arithmetic (fractions.Fraction
end to end, no floating point), so identities such as P_2 = X(X-c-1) or
Q_4(c+1) = 1-c^2 with Q_4 = 12 P_4 / X can be checked bit-exactly.

It also evaluates the value H(2) at c = 1 through the residue decomposition

    p_n = [(-2)^n/n! + (-2)^{n-1}/(n-1)!] + q_n,
    q_n = coefficient of w^n in (1-w)^{n-1} e^{2w},

whose outcome p_5 = 0, p_6 = -4/45 settles the sign of H(2) for a near 1 in
dimension 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

MAX_ORDER = 8


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in one variable with exact rational coefficients.

    coefficients[i] is the coefficient of X^i; trailing zeros are trimmed so
    equality is canonical.
    """

    coefficients: tuple[Fraction, ...]

    @staticmethod
    def from_coefficients(coeffs: Iterable[Rational]) -> "RationalPolynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return RationalPolynomial(tuple(cs))

    @staticmethod
    def zero() -> "RationalPolynomial":
        return RationalPolynomial(())

    @staticmethod
    def constant(value: Rational) -> "RationalPolynomial":
        return RationalPolynomial.from_coefficients([value])

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coefficients) - 1

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        a = list(self.coefficients) + [Fraction(0)] * (n - len(self.coefficients))
        b = list(other.coefficients) + [Fraction(0)] * (n - len(other.coefficients))
        return RationalPolynomial.from_coefficients(x + y for x, y in zip(a, b))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + other.scaled(-1)

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if self.is_zero or other.is_zero:
            return RationalPolynomial.zero()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, ci in enumerate(self.coefficients):
            for j, cj in enumerate(other.coefficients):
                out[i + j] += ci * cj
        return RationalPolynomial.from_coefficients(out)

    def scaled(self, factor: Rational) -> "RationalPolynomial":
        return RationalPolynomial.from_coefficients(
            Fraction(factor) * c for c in self.coefficients
        )

    def __call__(self, x: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * Fraction(x) + c
        return acc

    def shifted_down(self) -> "RationalPolynomial":
        """Divide by X; requires a zero constant term."""
        if self.is_zero:
            return self
        if self.coefficients[0] != 0:
            raise ValueError("constant term is nonzero, not divisible by X")
        return RationalPolynomial.from_coefficients(self.coefficients[1:])

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            parts.append(f"({c})*X^{i}" if i else f"({c})")
        return " + ".join(parts)


# A "series" is a list of RationalPolynomial, index = power of the expansion
# variable (h or k).

Series = list


def _series_mul(a: Sequence[RationalPolynomial], b: Sequence[RationalPolynomial],
                order: int) -> Series:
    out = [RationalPolynomial.zero() for _ in range(order + 1)]
    for i, pi in enumerate(a[: order + 1]):
        if pi.is_zero:
            continue
        for j, pj in enumerate(b[: order + 1 - i]):
            if pj.is_zero:
                continue
            out[i + j] = out[i + j] + pi * pj
    return out


def _series_exp(a: Sequence[RationalPolynomial], order: int) -> Series:
    """exp of a series with zero constant term, to the given order.

    Uses the recurrence n E_n = sum_{j=1..n} j A_j E_{n-j}, obtained from
    E' = A' E.
    """
    if a and not a[0].is_zero:
        raise ValueError("exp of a series requires a zero constant term")
    out = [RationalPolynomial.constant(1)]
    for n in range(1, order + 1):
        acc = RationalPolynomial.zero()
        for j in range(1, n + 1):
            aj = a[j] if j < len(a) else RationalPolynomial.zero()
            if aj.is_zero:
                continue
            acc = acc + aj.scaled(j) * out[n - j]
        out.append(acc.scaled(Fraction(1, n)))
    return out


def _generalized_binomial(upper: Rational, i: int) -> Fraction:
    """binom(upper, i) for rational or negative integer upper."""
    if i < 0:
        return Fraction(0)
    num = Fraction(1)
    u = Fraction(upper)
    for j in range(i):
        num *= u - j
    return num / factorial(i)


def _check_order(order: int) -> None:
    if not 0 <= order <= MAX_ORDER:
        raise ValueError(f"order must lie in [0, {MAX_ORDER}], got {order}")


def taylor_h_d1(order: int = 4) -> Series:
    """Expansion of H_{1+h}(X) at d = 1 in powers of h.

    H = (1+h) e^{-(2h+h^2)X} + e^{(1-(1+h)^{-2})X} - 2 - h.  Both exponents
    are expanded exactly: the second from the binomial series of (1+h)^{-2},
    whose n-th coefficient is (-1)^n (n+1).  Returns [P_0, ..., P_order] with
    each P_n a RationalPolynomial in X.
    """
    _check_order(order)
    X = RationalPolynomial.from_coefficients([0, 1])
    zero = RationalPolynomial.zero()

    # exponent of the first term: -(2h + h^2) X
    exp1 = [zero, X.scaled(-2), X.scaled(-1)]
    e1 = _series_exp(exp1, order)
    one_plus_h = [RationalPolynomial.constant(1), RationalPolynomial.constant(1)]
    term1 = _series_mul(one_plus_h, e1, order)

    # exponent of the second term: (1 - (1+h)^{-2}) X
    exp2 = [zero]
    for n in range(1, order + 1):
        exp2.append(X.scaled(-_generalized_binomial(-2, n)))
    term2 = _series_exp(exp2, order)

    out = [term1[n] + term2[n] for n in range(order + 1)]
    out[0] = out[0] - RationalPolynomial.constant(2)
    if order >= 1:
        out[1] = out[1] - RationalPolynomial.constant(1)
    return out


def taylor_k_general(c: Rational, order: int = 4) -> Series:
    """Expansion of H in powers of k = a^2 - 1 at c = d/2, exact in c.

    H = (1+k)^c e^{-kX} + e^{(1-(1+k)^{-1})X} - 1 - (1+k)^c.  The factor
    (1+k)^c uses the generalized binomial series with rational c; the second
    exponent is X times the geometric series k - k^2 + k^3 - ...
    """
    _check_order(order)
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    X = RationalPolynomial.from_coefficients([0, 1])
    zero = RationalPolynomial.zero()

    binom = [RationalPolynomial.constant(_generalized_binomial(c, n))
             for n in range(order + 1)]
    e1 = _series_exp([zero, X.scaled(-1)], order)
    term1 = _series_mul(binom, e1, order)

    exp2 = [zero]
    for n in range(1, order + 1):
        exp2.append(X.scaled(Fraction((-1) ** (n + 1))))
    term2 = _series_exp(exp2, order)

    out = [term1[n] + term2[n] - binom[n] for n in range(order + 1)]
    out[0] = out[0] - RationalPolynomial.constant(1)
    return out


def q4_polynomial(c: Rational) -> RationalPolynomial:
    """Q_4 = 12 P_4 / X from the k-expansion; satisfies Q_4(c+1) = 1 - c^2."""
    p4 = taylor_k_general(c, 4)[4]
    return p4.scaled(12).shifted_down()


def substitute_k_of_h(k_series: Sequence[RationalPolynomial],
                      order: int) -> Series:
    """Compose a k-series with k = 2h + h^2, truncated at the given order.

    [h^n](2h+h^2)^m = binom(m, n-m) 2^{2m-n} since (2h+h^2)^m = h^m (2+h)^m.
    """
    out = [RationalPolynomial.zero() for _ in range(order + 1)]
    for m, pm in enumerate(k_series[: order + 1]):
        if pm.is_zero:
            continue
        for n in range(m, min(2 * m, order) + 1):
            coeff = _generalized_binomial(m, n - m) * Fraction(2) ** (2 * m - n)
            out[n] = out[n] + pm.scaled(coeff)
    return out


def residue_q(n: int) -> Fraction:
    """Coefficient of w^n in (1-w)^{n-1} e^{2w}, as an exact rational.

    Equals sum_j binom(n-1, n-j) (-1)^{n-j} 2^j / j!; the generalized binomial
    handles the n = 0 case (negative upper index) uniformly.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = Fraction(0)
    for j in range(n + 1):
        total += (_generalized_binomial(n - 1, n - j) * (-1) ** (n - j)
                  * Fraction(2 ** j, factorial(j)))
    return total


def linear_exp_coeff(n: int) -> Fraction:
    """Coefficient of k^n in (1+k) e^{-2k}, n >= 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return (Fraction((-2) ** n, factorial(n))
            + Fraction((-2) ** (n - 1), factorial(n - 1)))


def p56_check() -> tuple[Fraction, Fraction]:
    """The k^5 and k^6 coefficients of H(2) at c = 1.

    p_n = [(-2)^n/n! + (-2)^{n-1}/(n-1)!] + q_n.  Expected (0, -4/45): the
    first vanishing and the second strictly negative force the family root
    above 2 in dimension 2 for a near 1.
    """
    return (linear_exp_coeff(5) + residue_q(5),
            linear_exp_coeff(6) + residue_q(6))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    expected: str
    actual: str
    ok: bool


def run_identity_checks(order: int = 6) -> list[IdentityCheck]:
    """All exact identities, each compared bit-exactly.

    Returns one record per identity; used by the CLI self-check, which exits
    nonzero if any record has ok = False.
    """
    _check_order(order)
    checks: list[IdentityCheck] = []
    X = RationalPolynomial.from_coefficients([0, 1])

    def rec(name: str, expected, actual) -> None:
        checks.append(IdentityCheck(name, str(expected), str(actual),
                                    expected == actual))

    hs = taylor_h_d1(max(order, 4))
    rec("h-series P0 = 0", RationalPolynomial.zero(), hs[0])
    rec("h-series P1 = 0", RationalPolynomial.zero(), hs[1])
    rec("h-series P2 = 2X(2X-3)",
        RationalPolynomial.from_coefficients([0, -6, 4]), hs[2])
    rec("h-series P3 = -X(2X-3)",
        RationalPolynomial.from_coefficients([0, 3, -2]), hs[3])
    rec("h-series P4(3/2) = 3/2", Fraction(3, 2), hs[4](Fraction(3, 2)))

    for c in (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2),
              Fraction(7, 2)):
        ks = taylor_k_general(c, 4)
        p2_expected = X * (X - RationalPolynomial.constant(c + 1))
        rec(f"k-series P2 = X(X-c-1) at c={c}", p2_expected, ks[2])
        rec(f"k-series P3 = (c-2)/2 X(X-c-1) at c={c}",
            p2_expected.scaled(Fraction(c - 2, 2)), ks[3])
        rec(f"Q4(c+1) = 1-c^2 at c={c}", 1 - c * c, q4_polynomial(c)(c + 1))

    ks_half = taylor_k_general(Fraction(1, 2), 4)
    composed = substitute_k_of_h(ks_half, 4)
    for n in range(5):
        rec(f"cross-parametrization h^{n} at c=1/2", hs[n], composed[n])

    rec("q_0 = 1", Fraction(1), residue_q(0))
    rec("q_5 = -2/5", Fraction(-2, 5), residue_q(5))
    rec("q_6 = 4/45", Fraction(4, 45), residue_q(6))
    rec("(1+k)e^{-2k} coefficient at n=5 = 2/5", Fraction(2, 5),
        linear_exp_coeff(5))
    p5, p6 = p56_check()
    rec("p_5 = 0", Fraction(0), p5)
    rec("p_6 = -4/45", Fraction(-4, 45), p6)
    return checks
