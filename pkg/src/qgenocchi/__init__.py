"""Higher-order q-Genocchi polynomials in exact arithmetic, with numeric q-Gamma,
q-Mellin and q-Hurwitz-zeta evaluation."""

from .errors import (
    DivergentTail,
    DomainError,
    InvalidQ,
    LatticeConditionWarning,
    NonInvertibleConstantTerm,
    PoleAt,
    QGenError,
)
from .genocchi import (
    GenocchiTable,
    expand_polynomial,
    genocchi_numbers,
    genocchi_table,
    order_convolution,
    q_add_shift,
    rubin_on_genocchi,
)
from .qcore import QContext, format_rational, parse_rational, q_binom2_power, q_binomial, q_factorial, q_int
from .qgamma import FloatContext, PartialFractionSeries, qgamma_integral, qgamma_meromorphic, qgamma_product, qgamma_residue, qmellin
from .qpoly import QPolynomial, jackson_derivative, jackson_integral, poly_eval, rubin_derivative
from .qzeta import ZetaReport, euler_regularized_altsum, interpolation_check, qzeta_neg_int, qzeta_numeric
from .series import PowerSeries, Eq_series, eq_series, ps_add, ps_inv, ps_mul, ps_pow, ps_scale, ps_sub

__version__ = "0.1.0"
