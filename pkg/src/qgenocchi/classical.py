"""Classical (q = 1) Genocchi reference values, built without the q-series engine.

Route: Bernoulli numbers by the usual recurrence, G_n = 2 (1 - 2^n) B_n,
higher orders by binomial convolution, polynomials by the Appell expansion.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .qpoly import QPolynomial


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    return -sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0)) / (n + 1)


def genocchi_classical(N: int) -> list[Fraction]:
    """G_0..G_N from 2t/(e^t+1); G_1 = 1."""
    return [2 * (1 - 2**n) * bernoulli(n) for n in range(N + 1)]


def genocchi_classical_order(alpha: int, N: int) -> list[Fraction]:
    """Numbers of (2t/(e^t+1))^alpha via binomial (exponential) convolution."""
    base = genocchi_classical(N)
    cur = base
    for _ in range(alpha - 1):
        cur = [sum((comb(n, k) * cur[k] * base[n - k] for k in range(n + 1)), Fraction(0)) for n in range(N + 1)]
    return cur


def genocchi_classical_polys(alpha: int, N: int) -> list[QPolynomial]:
    nums = genocchi_classical_order(alpha, N)
    return [QPolynomial(comb(n, n - k) * nums[n - k] for k in range(n + 1)) for n in range(N + 1)]
