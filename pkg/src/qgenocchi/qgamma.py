"""Numeric q-Gamma: product, Jackson-integral and pole-expansion forms, plus the
q-Mellin transform and exact residues.

Floating work runs in mpmath at the precision carried by :class:`FloatContext`.
Bilateral lattice sums share one truncation rule: stop after ten consecutive
terms below ``tol/10`` of the running sum, and declare divergence after ten
consecutive terms that grow at a non-shrinking rate.
"""
from __future__ import annotations

import os
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import mpmath
from mpmath import mpf

from .errors import DivergentTail, DomainError, LatticeConditionWarning, PoleAt
from .qcore import QContext, _ctx, q_factorial

DEFAULT_PRECISION = 128
_RUN = 10
_MAX_TERMS = 200_000


def default_precision() -> int:
    return int(os.environ.get("QGEN_PRECISION_BITS", DEFAULT_PRECISION))


@dataclass(frozen=True)
class FloatContext:
    q: mpf
    precision: int = field(default_factory=default_precision)
    tol: mpf = mpf("1e-20")

    def __post_init__(self):
        if self.precision < 64:
            raise ValueError("precision must be at least 64 bits")
        with mpmath.workprec(self.precision):
            q = _to_mpf(self.q)
            tol = _to_mpf(self.tol)
        if not 0 < q < 1:
            raise DomainError(f"q must lie strictly inside (0, 1), got {q}")
        if not tol > 0:
            raise ValueError("tol must be positive")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "tol", tol)

    def prec(self):
        return mpmath.workprec(self.precision)

    def q_number(self, x) -> mpf:
        """[x]_q for real x."""
        return (1 - self.q**x) / (1 - self.q)

    def lattice_exponent(self) -> Optional[int]:
        """m with 1 - q = q^m, when such an integer exists (to working precision)."""
        with self.prec():
            r = mpmath.log(1 - self.q) / mpmath.log(self.q)
            m = int(mpmath.nint(r))
            if abs(r - m) < mpf(2) ** (-self.precision // 2):
                return m
        return None


def _to_mpf(v) -> mpf:
    if isinstance(v, Fraction):
        return mpf(v.numerator) / v.denominator
    if isinstance(v, str) and "/" in v:
        p, r = v.split("/")
        return mpf(int(p)) / int(r)
    return mpf(v)


def _check_pole(x, where=None):
    if x <= 0 and x == int(x):
        raise PoleAt(where if where is not None else int(x))


def qpochhammer_inf(fctx: FloatContext, a) -> mpf:
    """(a; q)_inf, truncated once the remaining factors cannot move the product by tol/4."""
    q = fctx.q
    thresh = fctx.tol * (1 - q) / 4
    out = mpf(1)
    term = _to_mpf(a)
    for _ in range(_MAX_TERMS):
        out *= 1 - term
        if abs(term) < thresh:
            return out
        term *= q
    raise DivergentTail("q-Pochhammer product did not settle")


def qgamma_product(fctx: FloatContext, x) -> mpf:
    """(q;q)_inf / (q^x;q)_inf * (1-q)^(1-x)."""
    with fctx.prec():
        x = _to_mpf(x)
        _check_pole(x)
        q = fctx.q
        return qpochhammer_inf(fctx, q) / qpochhammer_inf(fctx, q**x) * (1 - q) ** (1 - x)


def Eq_minus_qt(fctx: FloatContext, t) -> mpf:
    """E_q(-q t) through its product form prod_k (1 - (1-q) q^(k+1) t)."""
    q = fctx.q
    return qpochhammer_inf(fctx, (1 - q) * q * t)


@dataclass
class LatticeSum:
    """Result of a truncated lattice sum, with truncation metadata."""

    value: mpf
    terms: int
    last_term: mpf
    warnings: list = field(default_factory=list)

    def metadata(self) -> dict:
        return {
            "terms": self.terms,
            "last_term": mpmath.nstr(self.last_term, 8),
            "warnings": list(self.warnings),
        }


def _one_sided(fctx: FloatContext, term: Callable[[int], mpf], direction: int, start: int = 0):
    """Sum term(start), term(start+direction), ... under the truncation rule."""
    total = mpf(0)
    small = grow = 0
    prev = prev_ratio = None
    j = start
    for count in range(1, _MAX_TERMS + 1):
        t = term(j)
        total += t
        a = abs(t)
        growth = a / prev if prev else None
        # a hump (growth ratio shrinking towards 1) is not divergence
        if growth is not None and growth > 1 and (prev_ratio is None or growth >= prev_ratio):
            grow += 1
            if grow >= _RUN:
                raise DivergentTail(f"terms grow for {_RUN} consecutive indices near j={j}")
        else:
            grow = 0
        prev_ratio = growth
        # geometric tail estimate from the observed ratio, so slow decay is not cut early
        ratio = a / prev if prev else mpf(0)
        tail = a * ratio / (1 - ratio) if ratio < 1 else mpmath.inf
        if a == 0 or (a <= fctx.tol / 10 * abs(total) and tail <= fctx.tol / 10 * abs(total)):
            small += 1
            if small >= _RUN:
                return total, count, t
        else:
            small = 0
        prev = a
        j += direction
    raise DivergentTail("lattice sum did not converge")


def jackson_integral_numeric(fctx: FloatContext, f: Callable[[mpf], mpf], x) -> LatticeSum:
    """int_0^x f(t) d_q t = (1-q) x sum_{l>=0} q^l f(q^l x)."""
    with fctx.prec():
        q = fctx.q
        x = _to_mpf(x)
        s, n, last = _one_sided(fctx, lambda l: q**l * f(q**l * x), +1)
        return LatticeSum((1 - q) * x * s, n, last)


def qmellin(fctx: FloatContext, f: Callable[[mpf], mpf], s) -> LatticeSum:
    """M_q(f)(s) = (1-q) sum_{j in Z} q^(j s) f(q^j)."""
    with fctx.prec():
        q = fctx.q
        s = _to_mpf(s)
        term = lambda j: q ** (j * s) * f(q**j)
        up, n1, last1 = _one_sided(fctx, term, +1, 0)
        down, n2, last2 = _one_sided(fctx, term, -1, -1)
        last = max(abs(last1), abs(last2))
        return LatticeSum((1 - q) * (up + down), n1 + n2, last)


def qgamma_integral(fctx: FloatContext, s, form: str = "finite") -> LatticeSum:
    """Gamma_q(s) as a Jackson integral of t^(s-1) E_q(-q t).

    ``form="finite"`` integrates over [0, 1/(1-q)]; ``form="improper"`` is the
    bilateral sum over [0, inf), which equals Gamma_q(s) only under the lattice
    condition and otherwise carries a :class:`LatticeConditionWarning`.
    """
    with fctx.prec():
        s = _to_mpf(s)
        if s <= 0:
            raise DomainError(f"integral form needs s > 0, got {s}")
        q = fctx.q
        f = lambda t: t ** (s - 1) * Eq_minus_qt(fctx, t)
        if form == "finite":
            return jackson_integral_numeric(fctx, f, 1 / (1 - q))
        if form != "improper":
            raise ValueError(f"unknown form {form!r}")
        notes = []
        if fctx.lattice_exponent() is None:
            msg = "log(1-q)/log(q) is not an integer; improper form differs from Gamma_q"
            warnings.warn(msg, LatticeConditionWarning, stacklevel=2)
            notes.append("LatticeConditionWarning")
        res = qmellin(fctx, lambda t: Eq_minus_qt(fctx, t), s)
        res.warnings.extend(notes)
        return res


@dataclass(frozen=True)
class PartialFractionSeries:
    """g(z) = sum_n a_n / [z + n]_q.

    ``coeff(n)`` gives a_n. ``tail_bound(n0)`` must bound sum_{n >= n0} |a_n|;
    a finite coefficient list needs no bound.
    """

    coeff: Callable[[int], object]
    tail_bound: Optional[Callable[[int], object]] = None
    length: Optional[int] = None

    @classmethod
    def finite(cls, coeffs: Sequence) -> "PartialFractionSeries":
        coeffs = list(coeffs)
        return cls(coeff=lambda n: coeffs[n] if n < len(coeffs) else 0, length=len(coeffs))

    def residue_at(self, n: int):
        """Coefficient of 1/[z+n]_q at the pole z = -n."""
        return self.coeff(n)


def partial_fraction_eval(pfs: PartialFractionSeries, fctx: FloatContext, z) -> mpf:
    with fctx.prec():
        q = fctx.q
        z = _to_mpf(z)
        total = mpf(0)
        n = 0
        while True:
            if pfs.length is not None and n >= pfs.length:
                return total
            a = _to_mpf(pfs.coeff(n))
            if a != 0:
                if z + n == 0:
                    raise PoleAt(-n)
                total += a / fctx.q_number(z + n)
            n += 1
            if pfs.length is None and q ** (z + n) <= mpf(1) / 2:
                # for q^(z+m) <= 1/2 every later |1/[z+m]_q| is at most 2(1-q)
                bound = 2 * (1 - q) * _to_mpf(pfs.tail_bound(n))
                if bound <= fctx.tol / 4 * abs(total) or bound == 0:
                    return total
            if n > _MAX_TERMS:
                raise DivergentTail("partial fraction series did not converge")


def _gamma_pole_coeff(ctx_q: Fraction):
    ctx = QContext(ctx_q)

    def coeff(j):
        return (-1) ** j * ctx_q ** ((j + 1) * j // 2) / q_factorial(ctx, j)

    return coeff


def qgamma_residue(ctx, j: int) -> Fraction:
    """(-1)^j q^C(j+1,2) / [j]_q!, the coefficient of 1/[z+j]_q at z = -j."""
    ctx = _ctx(ctx)
    if j < 0:
        raise ValueError("j must be >= 0")
    return (-1) ** j * ctx.q ** ((j + 1) * j // 2) / q_factorial(ctx, j)


def classical_residue(fctx: FloatContext, pole_coeff) -> mpf:
    """Convert a coefficient of 1/[z+j]_q into a coefficient of 1/(z+j)."""
    with fctx.prec():
        q = fctx.q
        return _to_mpf(pole_coeff) * (1 - q) / (-mpmath.log(q))


def gamma_pole_series(fctx: FloatContext, scale=1) -> PartialFractionSeries:
    """Pole part sum_j a_j scale^j / [z+j]_q with a_j the q-Gamma residues."""
    q = fctx.q
    c = _to_mpf(scale)

    def coeff(j):
        return (-1) ** j * q ** (j * (j + 1) // 2) * c**j / _qfact_f(fctx, j)

    def tail(n0):
        # |a_(n+1)/a_n| = q^(n+1) c / [n+1]_q <= q^(n0+1) c for n >= n0
        ratio = q ** (n0 + 1) * c
        if ratio >= 1:
            return mpmath.inf
        return abs(coeff(n0)) / (1 - ratio)

    return PartialFractionSeries(coeff=coeff, tail_bound=tail)


def _qfact_f(fctx: FloatContext, n: int) -> mpf:
    out = mpf(1)
    for k in range(2, n + 1):
        out *= fctx.q_number(k)
    return out


@dataclass
class MeromorphicParts:
    value: mpf
    entire_part: mpf
    pole_part: mpf
    lattice_points_above_one: int
    scale: mpf


def qgamma_meromorphic_parts(fctx: FloatContext, z) -> MeromorphicParts:
    """Split Gamma_q(z) into an entire Jackson sum over lattice points above 1 and
    a pole series.

    The Jackson lattice of int_0^(1/(1-q)) is {q^l / (1-q)}. The L points above
    1 give the entire part. With c = q^L / (1-q) in (q, 1], the rest expands to
    c^z sum_j a_j c^j / [z+j]_q. Under the lattice condition c = 1 and this is
    the familiar sum_j a_j / [z+j]_q.
    """
    with fctx.prec():
        z = _to_mpf(z)
        _check_pole(z)
        q = fctx.q
        X = 1 / (1 - q)
        m = fctx.lattice_exponent()
        if m is not None:
            L = m
            c = mpf(1)
        else:
            L = 0
            while q**L * X > 1:
                L += 1
            c = q**L * X
        entire = mpf(0)
        for l in range(L):
            t = q**l * X
            # E_q(-q t) at t = q^l/(1-q) is (q^(l+1); q)_inf
            entire += (1 - q) * t**z * qpochhammer_inf(fctx, q ** (l + 1))
        pole = c**z * partial_fraction_eval(gamma_pole_series(fctx, c), fctx, z)
        return MeromorphicParts(entire + pole, entire, pole, L, c)


def qgamma_meromorphic(fctx: FloatContext, z) -> mpf:
    return qgamma_meromorphic_parts(fctx, z).value


def qgamma(fctx: FloatContext, x, method: str = "product") -> mpf:
    if method == "product":
        return qgamma_product(fctx, x)
    if method == "integral":
        return qgamma_integral(fctx, x).value
    if method == "meromorphic":
        return qgamma_meromorphic(fctx, x)
    raise ValueError(f"unknown method {method!r}")


def residue_numeric_limit(fctx: FloatContext, j: int, eps="1e-6") -> mpf:
    """[z+j]_q * Gamma_q(z) at z = -j + eps, the numeric side of the residue check."""
    with fctx.prec():
        eps = _to_mpf(eps)
        z = -j + eps
        return fctx.q_number(eps) * qgamma_meromorphic(fctx, z)
