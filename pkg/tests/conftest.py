from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qgelfand.scalars import GaussianRational
from qgelfand.suq2 import SUq2

small_ints = st.integers(min_value=-50, max_value=50)
denominators = st.integers(min_value=1, max_value=40)
rationals = st.builds(Fraction, st.integers(min_value=-99, max_value=99), denominators)
nonzero_rationals = st.builds(Fraction, st.integers(min_value=1, max_value=99) | st.integers(min_value=-99, max_value=-1),
                              denominators)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = st.one_of(
    st.builds(GaussianRational, nonzero_rationals, rationals),
    st.builds(GaussianRational, rationals, nonzero_rationals),
)
s_values = st.sampled_from([Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 4), Fraction(9, 10)])


@pytest.fixture(scope="session")
def alg():
    return SUq2(Fraction(1, 2))


@pytest.fixture(scope="session")
def alg34():
    return SUq2(Fraction(3, 4))
