import pytest

from quadwiener.construct import fixture
from quadwiener.enumeration import enumerate_quadrangulations


def enumerated(n):
    """All quadrangulations of one size (cached across the whole session)."""
    return list(enumerate_quadrangulations(n).graphs())


@pytest.fixture(scope="session")
def cube():
    return fixture("cube")


@pytest.fixture(scope="session")
def pyramid5():
    return fixture("pyramid5")


@pytest.fixture(scope="session")
def c4():
    return fixture("c4")
