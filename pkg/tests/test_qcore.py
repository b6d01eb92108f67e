from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qgenocchi.errors import InvalidQ
from qgenocchi.qcore import (
    QContext,
    format_rational,
    parse_rational,
    q_binom2_power,
    q_binomial,
    q_factorial,
    q_int,
)

from conftest import Q_VALUES, q_contexts

HALF = QContext(Fraction(1, 2))


def pascal_binomial(q, n, k):
    """Independent oracle: the q-Pascal recurrence from the boundary values."""
    if k < 0 or k > n:
        return Fraction(0)
    if k == 0 or k == n:
        return Fraction(1)
    return pascal_binomial(q, n - 1, k - 1) + q**k * pascal_binomial(q, n - 1, k)


@pytest.mark.parametrize("q, n, expected", [
    (Fraction(1, 2), 0, 0),
    (Fraction(2, 3), 0, 0),
    (Fraction(1, 2), 3, Fraction(7, 4)),
    (Fraction(1), 5, 5),
])
def test_q_int_examples(q, n, expected):
    assert q_int(QContext(q), n) == expected


@pytest.mark.parametrize("q, n, expected", [
    (Fraction(1, 2), 0, 1),
    (Fraction(1, 2), 3, Fraction(21, 8)),
    (Fraction(1), 4, 24),
])
def test_q_factorial_examples(q, n, expected):
    assert q_factorial(QContext(q), n) == expected


def test_q_binomial_examples():
    assert q_binomial(HALF, 5, 0) == 1
    assert pascal_binomial(Fraction(1, 2), 4, 2) == Fraction(35, 16)
    assert q_binomial(HALF, 4, 2) == Fraction(35, 16)
    assert q_binomial(HALF, 3, 5) == 0
    assert q_binomial(HALF, 3, -1) == 0


def test_q_binom2_power_examples():
    assert q_binom2_power(HALF, 0) == 1
    assert q_binom2_power(HALF, 1) == 1
    assert q_binom2_power(HALF, 3) == Fraction(1, 8)


@pytest.mark.parametrize("q", Q_VALUES)
def test_q_binomial_matches_pascal_oracle(q):
    ctx = QContext(q)
    for n in range(10):
        for k in range(-1, n + 2):
            assert q_binomial(ctx, n, k) == pascal_binomial(q, n, k)


@given(q_contexts, st.integers(1, 40))
def test_q_int_increment(ctx, n):
    assert q_int(ctx, n) - q_int(ctx, n - 1) == ctx.q ** (n - 1)


@given(q_contexts, st.integers(1, 12), st.data())
def test_q_pascal_both_forms(ctx, n, data):
    k = data.draw(st.integers(1, n))
    q = ctx.q
    b = lambda n, k: q_binomial(ctx, n, k)
    assert b(n, k) == q**k * b(n - 1, k) + b(n - 1, k - 1)
    assert b(n, k) == b(n - 1, k) + q ** (n - k) * b(n - 1, k - 1)


@given(q_contexts, st.integers(0, 25))
def test_reciprocal_base_factorial(ctx, l):
    assert q_factorial(ctx.inverse(), l) == q_factorial(ctx, l) / q_binom2_power(ctx, l)


def test_classical_specialization():
    one = QContext(1)
    from math import comb, factorial
    for n in range(12):
        assert q_int(one, n) == n
        assert q_factorial(one, n) == factorial(n)
        for k in range(n + 1):
            assert q_binomial(one, n, k) == comb(n, k)


@pytest.mark.parametrize("bad", [0, Fraction(-1, 2), Fraction(3, 2)])
def test_context_rejects_out_of_range(bad):
    with pytest.raises(InvalidQ):
        QContext(bad)


def test_context_convergent_requirement():
    QContext(Fraction(1, 3)).require_convergent()
    with pytest.raises(InvalidQ):
        QContext(1).require_convergent()


def test_inverse_round_trip():
    ctx = QContext(Fraction(2, 3))
    inv = ctx.inverse()
    assert inv.q == Fraction(3, 2) and inv.reciprocal
    assert inv.inverse() == ctx


@pytest.mark.parametrize("text, value", [("-9/16", Fraction(-9, 16)), ("3", Fraction(3)), ("4/2", Fraction(2))])
def test_rational_round_trip(text, value):
    assert parse_rational(text) == value
    assert parse_rational(format_rational(value)) == value


def test_rational_format_is_canonical():
    assert format_rational(Fraction(-18, 32)) == "-9/16"
    assert format_rational(Fraction(6, 3)) == "2"


@pytest.mark.parametrize("bad", ["0.5", "1/0", "a/b", ""])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)
