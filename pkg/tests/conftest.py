import os

import pytest
from hypothesis import HealthCheck, settings

from skewring.classify import named_group
from skewring.groupcore import elementary_abelian, with_e_factor

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=200)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def q8():
    return named_group("Q8")


@pytest.fixture(scope="session")
def d4():
    return named_group("D4")


@pytest.fixture(scope="session")
def g16_4():
    return named_group("G[16,4]")


@pytest.fixture(scope="session")
def g16_8():
    return named_group("G[16,8]")


@pytest.fixture(scope="session")
def q8c2():
    return named_group("Q8xC2")


@pytest.fixture(scope="session")
def small_groups():
    """A spread of groups up to order 32 used by property tests."""
    names = ["Q8", "D4", "S3", "G[16,3]", "G[16,4]", "G[16,8]", "G[16,9]", "G[16,13]", "Q8xC2"]
    out = [named_group(n) for n in names]
    out += [elementary_abelian(2), with_e_factor(named_group("D4"), 1)]
    return out


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.RESULTS[n][1])
