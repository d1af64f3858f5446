import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from gaussian_partners import fixtures as fx

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def j6_state():
    return fx.j6()


@pytest.fixture
def pure3_state():
    return fx.pure3()


def complex_vectors(rng, dim, count=1):
    return rng.normal(size=(dim, count)) + 1j * rng.normal(size=(dim, count))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[number])
