"""Dense polynomials in x over the rationals, and the three q-operators on them.

The operators act monomial-wise:

* Jackson derivative  D_q x^n = [n]_q x^(n-1)
* Jackson integral    x^n -> x^(n+1) / [n+1]_q
* Rubin's symmetric operator, x^l -> q^(-l) [l]_q x^(l-1) (l even) and
  [l]_q x^(l-1) (l odd), which is what the five-point quotient
  (f(x/q) + f(-x/q) - f(qx) + f(-qx) - 2 f(-x)) / (2 (1-q) x) gives on x^l.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .qcore import QContext, _ctx, format_rational, parse_rational, q_int


class QPolynomial:
    """Immutable polynomial stored lowest degree first, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> "QPolynomial":
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> "QPolynomial":
        return cls([0, 1])

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "QPolynomial":
        return cls(parse_rational(s) for s in items)

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def as_constant(self):
        """The value if the polynomial is constant, else None."""
        if self.degree <= 0:
            return self[0]
        return None

    def __call__(self, x0) -> Fraction:
        return poly_eval(self, x0)

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPolynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({self.to_strings()})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms)

    @staticmethod
    def _lift(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return QPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = QPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def scale_argument(self, c) -> "QPolynomial":
        """p(c x), by scaling a_k -> a_k c^k."""
        c = Fraction(c)
        return QPolynomial(a * c**k for k, a in enumerate(self.coeffs))

    def shift(self, y) -> "QPolynomial":
        """p(x + y) as a polynomial in x (classical, commuting shift)."""
        out = QPolynomial()
        base = QPolynomial([y, 1])
        for a in reversed(self.coeffs):
            out = out * base + a
        return out

    def divide_by_x(self) -> "QPolynomial":
        if self[0] != 0:
            raise ArithmeticError("constant term is nonzero; not divisible by x")
        return QPolynomial(self.coeffs[1:])

    def derivative(self) -> "QPolynomial":
        return QPolynomial(k * a for k, a in enumerate(self.coeffs) if k)


def poly_eval(p: QPolynomial, x0) -> Fraction:
    """Horner evaluation, exact."""
    x0 = Fraction(x0)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * x0 + a
    return acc


def jackson_derivative(ctx, p: QPolynomial) -> QPolynomial:
    ctx = _ctx(ctx)
    return QPolynomial(q_int(ctx, k) * a for k, a in enumerate(p.coeffs) if k)


def jackson_integral(ctx, p: QPolynomial) -> QPolynomial:
    """Antiderivative from 0: x^n -> x^(n+1)/[n+1]_q."""
    ctx = _ctx(ctx)
    return QPolynomial([0] + [a / q_int(ctx, k + 1) for k, a in enumerate(p.coeffs)])


def rubin_monomial_factor(ctx, l: int) -> Fraction:
    """Coefficient c with  rubin(x^l) = c x^(l-1);  zero for l = 0."""
    ctx = _ctx(ctx)
    if l == 0:
        return Fraction(0)
    if ctx.classical:
        return Fraction(l)
    if l % 2 == 0:
        return ctx.q ** (-l) * q_int(ctx, l)
    return q_int(ctx, l)


def rubin_derivative(ctx, p: QPolynomial) -> QPolynomial:
    """Rubin's q-derivative; at q = 1 this is the ordinary derivative."""
    ctx = _ctx(ctx)
    if ctx.classical:
        return p.derivative()
    return QPolynomial(rubin_monomial_factor(ctx, k) * a for k, a in enumerate(p.coeffs) if k)


def jackson_quotient(ctx: QContext, p: QPolynomial) -> QPolynomial:
    """(p(x) - p(qx)) / ((1-q) x) computed by polynomial division; needs q != 1."""
    q = _ctx(ctx).q
    return (p - p.scale_argument(q)).divide_by_x() * (1 / (1 - q))


def rubin_quotient(ctx: QContext, p: QPolynomial) -> QPolynomial:
    """The five-point quotient defining Rubin's operator, divided out symbolically."""
    q = _ctx(ctx).q
    num = (
        p.scale_argument(1 / q)
        + p.scale_argument(-1 / q)
        - p.scale_argument(q)
        + p.scale_argument(-q)
        - 2 * p.scale_argument(-1)
    )
    return num.divide_by_x() * (1 / (2 * (1 - q)))
