"""Higher-order q-Genocchi polynomials and the identities they satisfy.

The polynomials are defined through

    sum_n G_n^(a)(x) z^n / [n]_q!  =  ([2]_q z / (e_q(z) + 1))^a  e_q(z x),

and are extracted once, at table construction, by multiplying the z^n
coefficient by [n]_q!.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .qcore import QContext, _ctx, format_rational, parse_rational, q_binomial, q_factorial, q_int
from .qpoly import QPolynomial, poly_eval, rubin_derivative
from .series import PowerSeries, eq_series, ps_inv, ps_pow


@dataclass(frozen=True)
class GenocchiTable:
    ctx: QContext
    alpha: int
    N: int
    polys: tuple[QPolynomial, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.polys) != self.N + 1:
            raise ValueError("polys must hold N + 1 entries")

    @property
    def numbers(self) -> list[Fraction]:
        return [p[0] for p in self.polys]

    def __getitem__(self, n: int) -> QPolynomial:
        return self.polys[n]

    def to_json(self) -> dict:
        return {
            "q": format_rational(self.ctx.q),
            "alpha": self.alpha,
            "N": self.N,
            "polys": [p.to_strings() for p in self.polys],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GenocchiTable":
        return cls(
            ctx=QContext(parse_rational(data["q"])),
            alpha=int(data["alpha"]),
            N=int(data["N"]),
            polys=tuple(QPolynomial.from_strings(row) for row in data["polys"]),
        )


def kernel_series(ctx, alpha: int, N: int) -> PowerSeries:
    """([2]_q z / (e_q(z) + 1))^alpha to order N, rational coefficients."""
    ctx = _ctx(ctx)
    inv = ps_inv(eq_series(ctx, N) + 1)
    base = (inv * q_int(ctx, 2)).shift(1)
    return ps_pow(base, alpha)


def exp_xz_series(ctx, N: int) -> PowerSeries:
    """e_q(z x) as a series in z with polynomial coefficients x^n / [n]_q!."""
    ctx = _ctx(ctx)
    return PowerSeries.from_function(N, lambda n: QPolynomial.monomial(n, 1 / q_factorial(ctx, n)))


def generating_series(ctx, alpha: int, N: int) -> PowerSeries:
    return kernel_series(ctx, alpha, N) * exp_xz_series(ctx, N)


def genocchi_table(ctx, alpha: int, N: int) -> GenocchiTable:
    ctx = _ctx(ctx)
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if N < alpha:
        raise ValueError(f"order N={N} must be >= alpha={alpha}")
    return _table(ctx, alpha, N)


@lru_cache(maxsize=256)
def _table(ctx: QContext, alpha: int, N: int) -> GenocchiTable:
    gs = generating_series(ctx, alpha, N)
    polys = []
    for n in range(N + 1):
        c = gs[n]
        p = c if isinstance(c, QPolynomial) else QPolynomial.constant(c)
        polys.append(p * q_factorial(ctx, n))
    return GenocchiTable(ctx, alpha, N, tuple(polys))


def genocchi_numbers(ctx, alpha: int, N: int) -> list[Fraction]:
    return genocchi_table(ctx, alpha, N).numbers


def expand_polynomial(ctx, table: GenocchiTable, j: int) -> QPolynomial:
    """sum_n [j choose n]_q G_n x^(j-n), built from the numbers alone."""
    ctx = _ctx(ctx)
    nums = table.numbers
    return QPolynomial(
        q_binomial(ctx, j, j - k) * nums[j - k] for k in range(j + 1)
    )


def q_add_shift(ctx, table: GenocchiTable, n: int, y) -> QPolynomial:
    """sum_j [n choose j]_q y^(n-j) G_j(x), a polynomial in x."""
    ctx = _ctx(ctx)
    y = Fraction(y)
    out = QPolynomial()
    for j in range(n + 1):
        out = out + table.polys[j] * (q_binomial(ctx, n, j) * y ** (n - j))
    return out


def q_add_shift_series(ctx, table: GenocchiTable, n: int, y) -> QPolynomial:
    """[n]_q! times the z^n coefficient of e_q(zy) * S_q(x, z), via a Cauchy product."""
    ctx = _ctx(ctx)
    y = Fraction(y)
    N = table.N
    ey = PowerSeries.from_function(N, lambda k: y**k / q_factorial(ctx, k))
    S = PowerSeries.from_function(N, lambda k: table.polys[k] * (1 / q_factorial(ctx, k)))
    c = (ey * S)[n]
    if not isinstance(c, QPolynomial):
        c = QPolynomial.constant(c)
    return c * q_factorial(ctx, n)


@dataclass(frozen=True)
class ConvolutionRow:
    l: int
    lhs: QPolynomial
    rhs: QPolynomial

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def order_convolution(ctx, alpha: int, beta: int, N: int) -> list[ConvolutionRow]:
    """Compare G^(a+b)_l(x) against sum_n [l choose n]_q G^(a)_n G^(b)_(l-n)(x) for l <= N."""
    ctx = _ctx(ctx)
    if alpha < 1 or beta < 1:
        raise ValueError("orders must be >= 1")
    top = max(N, alpha + beta)
    ta = genocchi_table(ctx, alpha, top)
    tb = genocchi_table(ctx, beta, top)
    tab = genocchi_table(ctx, alpha + beta, top)
    rows = []
    for l in range(N + 1):
        rhs = QPolynomial()
        for n in range(l + 1):
            rhs = rhs + tb.polys[l - n] * (q_binomial(ctx, l, n) * ta.numbers[n])
        rows.append(ConvolutionRow(l, tab.polys[l], rhs))
    return rows


def T_printed(ctx, l: int) -> Fraction:
    """q^-l + (-1)^l q^-l - q^l + (-1)^l q^l + 2(-1)^l (last sign as originally stated; compare T_corrected)."""
    q = _ctx(ctx).q
    s = (-1) ** l
    return q ** (-l) + s * q ** (-l) - q**l + s * q**l + 2 * s


def T_corrected(ctx, l: int) -> Fraction:
    """Same as T_printed with the last sign flipped to match the operator (-2 f(-x)).

    Vanishes at l = 0, so the sum below carries no x^-1 term.
    """
    q = _ctx(ctx).q
    s = (-1) ** l
    return q ** (-l) + s * q ** (-l) - q**l + s * q**l - 2 * s


@dataclass(frozen=True)
class RubinCheck:
    n: int
    operator: QPolynomial
    corrected_sum: QPolynomial
    corrected_split: QPolynomial
    # x times the printed sum; the printed l = 0 term becomes the constant coefficient
    printed_sum_times_x: QPolynomial
    printed_split: QPolynomial

    @property
    def consistent(self) -> bool:
        return self.operator == self.corrected_sum == self.corrected_split

    @property
    def printed_sum_matches(self) -> bool:
        return self.printed_sum_times_x == self.operator * QPolynomial.x()

    @property
    def printed_split_matches(self) -> bool:
        return self.printed_split == self.operator


def rubin_corrected_sum(ctx, table: GenocchiTable, n: int) -> QPolynomial:
    ctx = _ctx(ctx)
    nums = table.numbers
    out = QPolynomial()
    for l in range(1, n + 1):
        c = q_binomial(ctx, n, l) * T_corrected(ctx, l) * nums[n - l]
        out = out + QPolynomial.monomial(l - 1, c)
    return out * (1 / (2 * (1 - ctx.q)))


def rubin_corrected_split(ctx, table: GenocchiTable, n: int) -> QPolynomial:
    """Even/odd split of the corrected sum, x powers kept."""
    ctx = _ctx(ctx)
    q = ctx.q
    nums = table.numbers
    out = QPolynomial()
    for m in range(1, n // 2 + 1):
        c = q_binomial(ctx, n, 2 * m) * (q ** (-2 * m) - 1) * nums[n - 2 * m]
        out = out + QPolynomial.monomial(2 * m - 1, c)
    for m in range((n - 1) // 2 + 1 if n >= 1 else 0):
        c = q_binomial(ctx, n, 2 * m + 1) * (1 - q ** (2 * m + 1)) * nums[n - 1 - 2 * m]
        out = out + QPolynomial.monomial(2 * m, c)
    return out * (1 / (1 - q))


def rubin_printed_sum_times_x(ctx, table: GenocchiTable, n: int) -> QPolynomial:
    ctx = _ctx(ctx)
    nums = table.numbers
    out = QPolynomial()
    for l in range(n + 1):
        out = out + QPolynomial.monomial(l, q_binomial(ctx, n, l) * T_printed(ctx, l) * nums[n - l])
    return out * (1 / (2 * (1 - ctx.q)))


def rubin_printed_split(ctx, table: GenocchiTable, n: int) -> QPolynomial:
    """The even/odd split as stated: no x powers, (q^-2l + 1) and (q^(2l+1) + 1) weights."""
    ctx = _ctx(ctx)
    q = ctx.q
    nums = table.numbers
    total = Fraction(0)
    for l in range(n // 2 + 1):
        total += q_binomial(ctx, n, 2 * l) * (q ** (-2 * l) + 1) * nums[n - 2 * l]
    for l in range((n - 1) // 2 + 1 if n >= 1 else 0):
        total += q_binomial(ctx, n, 2 * l + 1) * (q ** (2 * l + 1) + 1) * nums[n - 1 - 2 * l]
    return QPolynomial.constant(total / (1 - q))


def rubin_on_genocchi(ctx, table: GenocchiTable, n: int) -> RubinCheck:
    ctx = _ctx(ctx)
    if ctx.classical:
        raise ValueError("the T-sum forms divide by 1 - q; use q != 1")
    return RubinCheck(
        n=n,
        operator=rubin_derivative(ctx, table.polys[n]),
        corrected_sum=rubin_corrected_sum(ctx, table, n),
        corrected_split=rubin_corrected_split(ctx, table, n),
        printed_sum_times_x=rubin_printed_sum_times_x(ctx, table, n),
        printed_split=rubin_printed_split(ctx, table, n),
    )
