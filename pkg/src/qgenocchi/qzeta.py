"""The q-Hurwitz-zeta type function

    Z_q(z, x: a) = [2]_q^a  sum_{l_1..l_a >= 0} (-1)^(l_1+..+l_a) / (q x + q (l_1+..+l_a))^z

at negative integers (exact, Abel/Euler regularized) and at positive reals
(numeric, Cohen-Villegas-Zagier acceleration), plus the check against the
Genocchi values it is meant to interpolate.

The a-fold sum collapses along s = l_1 + .. + l_a with weight C(s+a-1, a-1),
the number of compositions of s into a non-negative parts.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

import mpmath
from mpmath import mpf

from .errors import DomainError
from .genocchi import genocchi_table
from .qcore import _ctx, format_rational, q_binomial, q_factorial, q_int
from .qgamma import FloatContext, _to_mpf
from .qpoly import QPolynomial, poly_eval


def forward_differences_at_zero(p: QPolynomial) -> list[Fraction]:
    """(Delta^k p)(0) for k = 0..deg p."""
    d = p.degree
    if d < 0:
        return []
    vals = [poly_eval(p, i) for i in range(d + 1)]
    out = []
    while vals:
        out.append(vals[0])
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return out


def euler_regularized_altsum(p: QPolynomial) -> Fraction:
    """Abel/Euler value of sum_{l>=0} (-1)^l p(l) for a polynomial p.

    The Euler transform terminates: sum_k (-1)^k (Delta^k p)(0) / 2^(k+1).
    """
    return sum(
        (Fraction((-1) ** k, 2 ** (k + 1)) * dk for k, dk in enumerate(forward_differences_at_zero(p))),
        Fraction(0),
    )


def composition_weight(alpha: int) -> QPolynomial:
    """C(s + a - 1, a - 1) as a polynomial in s."""
    out = QPolynomial.constant(1)
    for i in range(1, alpha):
        out = out * QPolynomial([Fraction(i, i), Fraction(1, i)])
    return out


def qzeta_summand(ctx, n: int, x, alpha: int) -> QPolynomial:
    """C(s+a-1, a-1) (q x + q s)^n as a polynomial in s."""
    ctx = _ctx(ctx)
    q = ctx.q
    base = QPolynomial([q * Fraction(x), q])
    return composition_weight(alpha) * base**n


def qzeta_neg_int(ctx, n: int, x, alpha: int) -> Fraction:
    """Regularized Z_q(-n, x: alpha), exact."""
    ctx = _ctx(ctx)
    if alpha < 1 or n < 0:
        raise ValueError("need alpha >= 1 and n >= 0")
    return q_int(ctx, 2) ** alpha * euler_regularized_altsum(qzeta_summand(ctx, n, x, alpha))


def abel_power_values(kmax: int) -> list[Fraction]:
    """A_k = Abel sum of sum_{l>=0} (-1)^l l^k, from (r d/dr)^k 1/(1+r) at r = 1.

    Writes (r d/dr)^k (1+r)^-1 = P_k(r) / (1+r)^(k+1) and uses
    P_(k+1) = r (P_k' (1+r) - (k+1) P_k), which stays independent of the
    finite-difference route above.
    """
    P = QPolynomial.constant(1)
    r = QPolynomial.x()
    out = []
    for k in range(kmax + 1):
        out.append(poly_eval(P, 1) / 2 ** (k + 1))
        P = r * (P.derivative() * QPolynomial([1, 1]) - P * (k + 1))
    return out


def qzeta_neg_int_bruteforce(ctx, n: int, x, alpha: int) -> Fraction:
    """Regularize the alpha-fold sum one index at a time.

    (q x + q l_1 + .. + q l_a)^n is expanded by the multinomial theorem; each
    monomial prod l_i^(k_i) factors into prod A_(k_i).
    """
    ctx = _ctx(ctx)
    q = ctx.q
    x = Fraction(x)
    A = abel_power_values(n)
    # distribution over total degree spent on the l-variables, one dimension at a time
    # state[d] = sum over (k_1..k_i) with sum = d of prod A_(k_j) * multinomial part
    state = {0: Fraction(1)}
    for _ in range(alpha):
        nxt: dict[int, Fraction] = {}
        for d, v in state.items():
            for k in range(n - d + 1):
                nxt[d + k] = nxt.get(d + k, Fraction(0)) + v * A[k] / _fact(k)
        state = nxt
    total = Fraction(0)
    for d, v in state.items():
        # remaining n-d powers go to the x term; multinomial n!/(k_1!..k_a!(n-d)!)
        total += v * _fact(n) / _fact(n - d) * (q * x) ** (n - d) * q**d
    return q_int(ctx, 2) ** alpha * total


def _fact(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _cvz_terms(tol: mpf, alpha: int) -> int:
    # error of the CVZ weights on a moment sequence is about 2/(3+sqrt 8)^n; polynomial
    # growth of the composition weight costs roughly n^(2(alpha-1)) more
    rate = 3 + mpmath.sqrt(8)
    n = 4
    while 2 * mpf(n) ** (2 * alpha) / rate**n > tol:
        n += 1
    return n


def cvz_alternating_sum(a, n_terms: int) -> mpf:
    """Cohen-Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a(k)."""
    d = (3 + mpmath.sqrt(8)) ** n_terms
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    for k in range(n_terms):
        c = b - c
        s += c * a(k)
        b = (k + n_terms) * (k - n_terms) * b / ((k + mpf(1) / 2) * (k + 1))
    return s / d


def qzeta_numeric(fctx: FloatContext, z, x, alpha: int) -> mpf:
    with fctx.prec():
        z = _to_mpf(z)
        x = _to_mpf(x)
        if z <= 0:
            raise DomainError("z must be > 0; use qzeta_neg_int at negative integers")
        if x <= 0:
            raise DomainError("x must be > 0")
        if alpha < 1:
            raise ValueError("alpha must be >= 1")
        q = fctx.q
        n = _cvz_terms(fctx.tol, alpha)
        with mpmath.extraprec(int(n * 2.6) + 16):
            s = cvz_alternating_sum(lambda k: comb(k + alpha - 1, alpha - 1) / (q * x + q * k) ** z, n)
        return (1 + q) ** alpha * s


def qzeta_numeric_classical(z, x, alpha: int, tol="1e-20", precision: int = 128) -> mpf:
    """The q = 1 value of the same sum, for limit comparisons."""
    with mpmath.workprec(precision):
        z, x, tol = _to_mpf(z), _to_mpf(x), _to_mpf(tol)
        n = _cvz_terms(tol, alpha)
        with mpmath.extraprec(int(n * 2.6) + 16):
            s = cvz_alternating_sum(lambda k: comb(k + alpha - 1, alpha - 1) / (x + k) ** z, n)
        return 2**alpha * s


@dataclass(frozen=True)
class ZetaReport:
    n: int
    x: Fraction
    alpha: int
    q: Fraction
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def ratio(self) -> Optional[Fraction]:
        if self.rhs == 0:
            return None
        return self.lhs / self.rhs

    def to_json(self) -> dict:
        return {
            "q": format_rational(self.q),
            "alpha": self.alpha,
            "n": self.n,
            "x": format_rational(self.x),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "equal": self.equal,
            "ratio": None if self.ratio is None else format_rational(self.ratio),
        }


def interpolation_rhs(ctx, n: int, x, alpha: int) -> Fraction:
    """q^-n G_(n+a)^(a)(x) / ([a]_q! [n+a choose a]_q)."""
    ctx = _ctx(ctx)
    table = genocchi_table(ctx, alpha, n + alpha)
    g = poly_eval(table.polys[n + alpha], Fraction(x))
    return ctx.q ** (-n) * g / (q_factorial(ctx, alpha) * q_binomial(ctx, n + alpha, alpha))


def interpolation_check(ctx, n: int, x, alpha: int) -> ZetaReport:
    ctx = _ctx(ctx)
    x = Fraction(x)
    return ZetaReport(
        n=n,
        x=x,
        alpha=alpha,
        q=ctx.q,
        lhs=qzeta_neg_int(ctx, n, x, alpha),
        rhs=interpolation_rhs(ctx, n, x, alpha),
    )
