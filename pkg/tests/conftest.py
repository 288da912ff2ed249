import pytest

from softcluster.core import Carrier, make_soft_set
from softcluster.spacefile import fixture_path, parse_space_file


def load_fixture(name):
    return parse_space_file(fixture_path(name))


@pytest.fixture
def xyz():
    """Three elements, two parameters; the carrier of the shipped worked fixtures."""
    return Carrier(("x", "y", "z"), ("alpha", "beta"))


@pytest.fixture
def sets47(xyz):
    def s(a, b):
        return make_soft_set(xyz, {"alpha": list(a), "beta": list(b)})
    return {
        "R1": s("x", "y"), "R2": s("xy", "xy"), "R3": s("xy", "yz"), "R4": s("xz", "xy"),
        "A15": s("yz", "xz"), "mk": s,
    }


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
