from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, strategies as st
from mpmath import mpf

from qgenocchi.errors import DomainError
from qgenocchi.qcore import QContext
from qgenocchi.qgamma import FloatContext
from qgenocchi.qpoly import QPolynomial
from qgenocchi.qzeta import (
    abel_power_values,
    composition_weight,
    euler_regularized_altsum,
    interpolation_check,
    qzeta_neg_int,
    qzeta_neg_int_bruteforce,
    qzeta_numeric,
    qzeta_numeric_classical,
)

ONE = QContext(1)
R_ABEL = Fraction(9999, 10000)


def abel_mean(p: QPolynomial, r=R_ABEL) -> Fraction:
    """sum_l (-1)^l p(l) r^l in closed form: apply (r d/dr)^k to 1/(1+r) with sympy."""
    rs = sympy.symbols("r")
    f = 1 / (1 + rs)
    total = sympy.Integer(0)
    cur = f
    for c in p.coeffs:
        total += sympy.Rational(c.numerator, c.denominator) * cur
        cur = sympy.simplify(rs * sympy.diff(cur, rs))
    val = sympy.Rational(total.subs(rs, sympy.Rational(r.numerator, r.denominator)))
    return Fraction(int(val.p), int(val.q))


def abel_close(value: Fraction, ref: Fraction, p: QPolynomial) -> bool:
    # sums that regularize to zero are measured against 1e-2 of the coefficient scale
    floor = Fraction(1, 100) * max((abs(c) for c in p.coeffs), default=Fraction(1))
    return abs(value - ref) <= Fraction(1, 100) * max(abs(ref), floor)


def test_altsum_examples():
    assert euler_regularized_altsum(QPolynomial([1])) == Fraction(1, 2)
    assert euler_regularized_altsum(QPolynomial([0, 1])) == Fraction(-1, 4)
    assert euler_regularized_altsum(QPolynomial([0, 0, 1])) == 0
    assert euler_regularized_altsum(QPolynomial()) == 0


def test_power_values_match_eta_at_negative_integers():
    # sum_{l>=0} (-1)^l l^k = -eta(-k) for k >= 1
    A = abel_power_values(8)
    assert A[0] == Fraction(1, 2)
    for k in range(1, 9):
        eta = sympy.Rational(2 ** (k + 1) - 1, k + 1) * sympy.bernoulli(k + 1)
        assert A[k] == -Fraction(int(eta.p), int(eta.q))
        assert euler_regularized_altsum(QPolynomial.monomial(k)) == A[k]


@pytest.mark.parametrize("k", range(5))
def test_altsum_against_abel_mean_monomials(k):
    p = QPolynomial.monomial(k)
    assert abel_close(euler_regularized_altsum(p), abel_mean(p), p)


poly4 = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=1, max_size=5).map(QPolynomial)


@given(poly4, poly4, st.fractions(min_value=-2, max_value=2, max_denominator=4))
def test_altsum_linear(p, r, c):
    assert euler_regularized_altsum(p + r * c) == euler_regularized_altsum(p) + c * euler_regularized_altsum(r)


def test_composition_weight():
    from math import comb
    for alpha in range(1, 5):
        w = composition_weight(alpha)
        assert all(w(s) == comb(s + alpha - 1, alpha - 1) for s in range(10))


@pytest.mark.parametrize("n, x, expected", [(0, 0, 1), (1, 0, Fraction(-1, 2)), (1, Fraction(1, 2), 0)])
def test_neg_int_examples(n, x, expected):
    assert qzeta_neg_int(ONE, n, x, 1) == expected


@pytest.mark.parametrize("q", [Fraction(1, 2), Fraction(2, 3), Fraction(1)])
@pytest.mark.parametrize("alpha", [1, 2, 3])
def test_collapse_matches_bruteforce(q, alpha):
    ctx = QContext(q)
    for n in range(5):
        for x in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(-3, 7)):
            assert qzeta_neg_int(ctx, n, x, alpha) == qzeta_neg_int_bruteforce(ctx, n, x, alpha)


@pytest.mark.parametrize("alpha", [1, 2])
def test_interpolation_classical(alpha):
    for n in range(9):
        for x in (Fraction(0), Fraction(1, 2), Fraction(1)):
            rep = interpolation_check(ONE, n, x, alpha)
            assert rep.equal and rep.ratio in (None, 1)


def test_interpolation_examples():
    r = interpolation_check(ONE, 1, 0, 1)
    assert (r.lhs, r.rhs, r.equal) == (Fraction(-1, 2), Fraction(-1, 2), True)
    r = interpolation_check(ONE, 0, 0, 2)
    assert (r.lhs, r.rhs, r.equal) == (1, 1, True)
    r = interpolation_check(QContext(Fraction(1, 2)), 1, 0, 1)
    assert isinstance(r.lhs, Fraction) and isinstance(r.rhs, Fraction)
    assert r.to_json()["ratio"] == str(r.lhs / r.rhs)


def fctx(q, tol="1e-25"):
    with mpmath.workprec(128):
        return FloatContext(mpf(q), 128, mpf(tol))


def test_numeric_classical_alternating_harmonic():
    with mpmath.workprec(128):
        assert abs(qzeta_numeric_classical(1, 1, 1) - 2 * mpmath.log(2)) < mpf("1e-25")


@pytest.mark.parametrize("q", ["0.5", "0.8"])
@pytest.mark.parametrize("z", ["0.5", "1", "2", "3.5"])
def test_numeric_against_eta_closed_forms(q, z):
    f = fctx(q)
    with f.prec():
        z = mpf(z)
        qq = f.q
        # x = 1 turns the sums into Dirichlet eta values
        a1 = (1 + qq) * qq ** (-z) * mpmath.altzeta(z)
        a2 = (1 + qq) ** 2 * qq ** (-z) * mpmath.altzeta(z - 1)
        assert abs(qzeta_numeric(f, z, 1, 1) - a1) <= mpf("1e-20") * abs(a1)
        assert abs(qzeta_numeric(f, z, 1, 2) - a2) <= mpf("1e-20") * abs(a2)


def test_numeric_against_direct_summation():
    f = fctx("0.7", "1e-15")
    with f.prec():
        x, z = mpf("0.3"), mpf(2)
        direct = mpmath.nsum(lambda s: (-1) ** int(s) / (f.q * x + f.q * s) ** z, [0, mpmath.inf])
        assert abs(qzeta_numeric(f, z, x, 1) - (1 + f.q) * direct) < mpf("1e-12")


def test_numeric_near_one_approaches_classical():
    f = fctx("0.999999")
    for alpha in (1, 2):
        v = qzeta_numeric(f, 2, 1, alpha)
        ref = qzeta_numeric_classical(2, 1, alpha)
        assert abs(v - ref) <= mpf("1e-4") * abs(ref)


def test_numeric_large_x_bound():
    f = fctx("0.5")
    with f.prec():
        x, z = mpf(10) ** 6, mpf(2)
        v = qzeta_numeric(f, z, x, 1)
        lead = (1 + f.q) / (f.q * x) ** z
        assert 0 < v < lead
        assert abs(v - lead / 2) < mpf("1e-3") * lead


def test_numeric_domain():
    f = fctx("0.5")
    with pytest.raises(DomainError):
        qzeta_numeric(f, 0, 1, 1)
    with pytest.raises(DomainError):
        qzeta_numeric(f, 1, 0, 1)
