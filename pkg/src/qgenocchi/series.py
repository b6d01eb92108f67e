"""Truncated formal power series in z.

Coefficients are Fractions or :class:`~qgenocchi.qpoly.QPolynomial` (for
bivariate objects such as e_q(zx)); both rings share the same code path.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .errors import NonInvertibleConstantTerm
from .qcore import _ctx, q_binom2_power, q_factorial


def _scalar_inverse(c) -> Fraction:
    if isinstance(c, (int, Fraction)):
        value = Fraction(c)
    else:
        value = c.as_constant()
        if value is None:
            raise NonInvertibleConstantTerm(f"constant term {c} is not a constant")
    if value == 0:
        raise NonInvertibleConstantTerm("constant term is zero")
    return 1 / value


def _is_zero(c) -> bool:
    return c == 0


class PowerSeries:
    """c_0 + c_1 z + ... + c_N z^N + O(z^(N+1))."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) if isinstance(c, int) else c for c in coeffs)
        )

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def from_function(cls, order: int, coeff: Callable[[int], object]) -> "PowerSeries":
        return cls([coeff(n) for n in range(order + 1)])

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[: order + 1])

    def shift(self, k: int) -> "PowerSeries":
        """z^k times the series; the order is kept, so the top k coefficients drop."""
        zero = Fraction(0)
        return PowerSeries(([zero] * k + list(self.coeffs))[: self.order + 1])

    def map(self, f) -> "PowerSeries":
        return PowerSeries([f(c) for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries([other] + [0] * self.order)
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries([other] + [0] * self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = None
            for i in range(k + 1):
                if _is_zero(a[i]) or _is_zero(b[k - i]):
                    continue
                term = a[i] * b[k - i]
                acc = term if acc is None else acc + term
            out.append(Fraction(0) if acc is None else acc)
        return PowerSeries(out)

    def __rmul__(self, other):
        return PowerSeries([other * c for c in self.coeffs])

    def __pow__(self, alpha: int):
        return ps_pow(self, alpha)


def ps_add(a: PowerSeries, b) -> PowerSeries:
    return a + b


def ps_sub(a: PowerSeries, b) -> PowerSeries:
    return a - b


def ps_scale(a: PowerSeries, c) -> PowerSeries:
    return a * c


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def ps_inv(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse via d_n = -(1/c_0) * sum_{k=1..n} c_k d_(n-k)."""
    inv0 = _scalar_inverse(a.coeffs[0])
    d = [inv0]
    for n in range(1, a.order + 1):
        acc = None
        for k in range(1, n + 1):
            if _is_zero(a.coeffs[k]) or _is_zero(d[n - k]):
                continue
            term = a.coeffs[k] * d[n - k]
            acc = term if acc is None else acc + term
        d.append(Fraction(0) if acc is None else -inv0 * acc)
    return PowerSeries(d)


def ps_pow(a: PowerSeries, alpha: int) -> PowerSeries:
    if alpha < 1:
        raise ValueError("exponent must be a positive integer")
    out = a
    for _ in range(alpha - 1):
        out = out * a
    return out


def eq_series(ctx, order: int) -> PowerSeries:
    """e_q(z) = sum z^l / [l]_q!."""
    ctx = _ctx(ctx)
    return PowerSeries.from_function(order, lambda l: 1 / q_factorial(ctx, l))


def Eq_series(ctx, order: int) -> PowerSeries:
    """E_q(z) = sum q^C(l,2) z^l / [l]_q!."""
    ctx = _ctx(ctx)
    return PowerSeries.from_function(order, lambda l: q_binom2_power(ctx, l) / q_factorial(ctx, l))
