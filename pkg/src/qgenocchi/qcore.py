"""Exact q-arithmetic over the rationals.

Every exact value in the package is a :class:`fractions.Fraction`; its ``str``
is already the canonical ``"p/r"`` form (``"3"`` when the denominator is 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidQ

Rational = Fraction


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/r"`` or an integer string. Decimal strings are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational of the form p/r: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


@dataclass(frozen=True)
class QContext:
    """Exact deformation parameter.

    Regular contexts need ``0 < q <= 1``. ``inverse()`` builds the reciprocal
    base ``1/q`` (so ``q >= 1``), which only the base-inversion identities use.
    """

    q: Fraction
    reciprocal: bool = False

    def __post_init__(self):
        q = parse_rational(self.q)
        object.__setattr__(self, "q", q)
        if q == 0:
            raise InvalidQ("q must be nonzero")
        if self.reciprocal:
            if not q >= 1:
                raise InvalidQ(f"reciprocal base must be >= 1, got {q}")
        elif not 0 < q <= 1:
            raise InvalidQ(f"q must lie in (0, 1], got {q}")

    @property
    def classical(self) -> bool:
        return self.q == 1

    def inverse(self) -> "QContext":
        return QContext(1 / self.q, reciprocal=not self.reciprocal)

    def require_convergent(self) -> None:
        if not 0 < self.q < 1:
            raise InvalidQ(f"operation needs 0 < q < 1, got {self.q}")

    def __str__(self):
        return format_rational(self.q)


def _ctx(ctx) -> QContext:
    return ctx if isinstance(ctx, QContext) else QContext(parse_rational(ctx))


def q_int(ctx, n: int) -> Fraction:
    """[n]_q = 1 + q + ... + q^(n-1); equals n at q = 1."""
    return _q_int(_ctx(ctx).q, n)


@lru_cache(maxsize=4096)
def _q_int(q: Fraction, n: int) -> Fraction:
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    if q == 1:
        return Fraction(n)
    return (1 - q**n) / (1 - q)


def q_factorial(ctx, n: int) -> Fraction:
    return _q_factorial(_ctx(ctx).q, n)


@lru_cache(maxsize=4096)
def _q_factorial(q: Fraction, n: int) -> Fraction:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = Fraction(1)
    for k in range(2, n + 1):
        out *= _q_int(q, k)
    return out


def q_binomial(ctx, n: int, k: int) -> Fraction:
    """Gaussian binomial [n choose k]_q; zero when k < 0 or k > n."""
    q = _ctx(ctx).q
    if k < 0 or k > n or n < 0:
        return Fraction(0)
    return _q_factorial(q, n) / (_q_factorial(q, k) * _q_factorial(q, n - k))


def q_binom2_power(ctx, l: int) -> Fraction:
    """q^(l(l-1)/2), the weight of the l-th coefficient of E_q."""
    return _ctx(ctx).q ** (l * (l - 1) // 2)
