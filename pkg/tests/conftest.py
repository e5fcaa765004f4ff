"""Session fixtures for the expensive classification runs.

The two genus-8 enumerations and the full certificate dominate the suite's
runtime, so each is computed once per session and shared.  The certificate
re-runs the second enumeration internally (it recomputes everything it
claims), which the suite accepts as the price of end-to-end honesty.
"""

import pytest

from weilsieve import ConstraintSet, eliminate_all, replay_theorem2
from weilsieve.enumeration import enumerate_real_weil


@pytest.fixture(scope="session")
def run24():
    """The 26 candidates compatible with 24 rational points."""
    cs = ConstraintSet.make(4, 8, {1: 24})
    return enumerate_real_weil(cs)


@pytest.fixture(scope="session")
def verdicts24(run24):
    return eliminate_all(run24, 4)


@pytest.fixture(scope="session")
def run_triple():
    """The 44 candidates with (P_1, P_2, P_3) = (16, 8, 32)."""
    cs = ConstraintSet.make(4, 8, {1: 16, 2: 8, 3: 32})
    return enumerate_real_weil(cs)


@pytest.fixture(scope="session")
def certificate():
    return replay_theorem2()
