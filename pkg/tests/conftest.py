from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from qgenocchi.qcore import QContext
from qgenocchi.qpoly import QPolynomial

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

Q_VALUES = (Fraction(1, 2), Fraction(2, 3), Fraction(1))

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)


def polynomials(max_degree=10):
    return st.lists(small_fractions, max_size=max_degree + 1).map(QPolynomial)


q_contexts = st.sampled_from(Q_VALUES).map(QContext)


@pytest.fixture(params=Q_VALUES, ids=lambda q: f"q={q}")
def ctx(request):
    return QContext(request.param)
