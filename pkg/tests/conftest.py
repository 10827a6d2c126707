import random
from fractions import Fraction

import pytest

from riordanembed.riordan import RiordanArray
from riordanembed.series import Series

_criteria = {}


def pytest_addoption(parser):
    parser.addoption("--run-network", action="store_true", default=False,
                     help="run live OEIS lookups")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-network"):
        return
    skip = pytest.mark.skip(reason="live network test; pass --run-network")
    for item in items:
        if "network" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    n = dict(report.user_properties).get("criterion")
    if n is None:
        return
    ok = report.passed
    _criteria[n] = _criteria.get(n, True) and ok


def pytest_itemcollected(item):
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        item.user_properties.append(("criterion", mark.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        terminalreporter.write_line("criterion %2d: %s" % (n, "PASS" if _criteria[n] else "FAIL"))


# random objects shared by the property tests --------------------------------------

def random_poly_series(rng, order, lead, start, degree=4, lo=-3, hi=3):
    coeffs = [0] * start + [lead] + [rng.randint(lo, hi) for _ in range(degree)]
    return Series(coeffs, order)


def random_riordan(rng, order=12, degree=4):
    """Integer Riordan array with polynomial g - 1 and f - x."""
    g = random_poly_series(rng, order, 1, 0, degree)
    f = random_poly_series(rng, order, 1, 1, degree)
    return RiordanArray(g, f)


def random_series(rng, order=10, lo=-5, hi=5, unit=False):
    c = [Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(order)]
    if unit and c[0] == 0:
        c[0] = Fraction(1)
    return Series(c, order)


@pytest.fixture
def rng():
    return random.Random(12345)
