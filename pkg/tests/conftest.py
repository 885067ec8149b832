import random
import re

import pytest

from rsg import DerivationContext, FrobeniusContext, OrePoly, RsgParams


@pytest.fixture(scope="session")
def k3():
    """GF(3)(t) with d/dt."""
    return DerivationContext(3)


@pytest.fixture(scope="session")
def gf9():
    """GF(9) = GF(3)[x]/(x^2+1) with Frob_3."""
    return FrobeniusContext(3, 2, modulus_ext=[1, 0, 1])


@pytest.fixture(scope="session")
def gf16():
    """GF(16) as a degree-2 extension of GF(4) = GF(2)[y]/(y^2+y+1)."""
    return FrobeniusContext(2, 2, e=2, modulus_base=[1, 1, 1])


@pytest.fixture(scope="session")
def thread_params(k3):
    t = k3.t
    return RsgParams(k3, 2, [0, 1], [[1, t, t**2], [1, t, t**2]])


@pytest.fixture(scope="session")
def gf9_params(gf9):
    g = gf9.primitive_element()
    return RsgParams(gf9, 2, [1, g], [[1, g], [1, g]])


@pytest.fixture(params=["derivation", "frobenius"])
def ctx(request, k3, gf9):
    return k3 if request.param == "derivation" else gf9


@pytest.fixture
def rng():
    return random.Random(20261016)


def random_poly(ctx, rng, degree):
    return OrePoly(ctx, [ctx.random_element(rng) for _ in range(degree + 1)])


# ---- acceptance summary -------------------------------------------------------

_CRITERION = re.compile(r"test_criterion_(\d+)_")
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit-criterion checks")


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if not match or (report.when != "call" and report.passed):
        return
    n = int(match.group(1))
    ok = _criteria.get(n, True) and report.passed
    _criteria[n] = ok


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if _criteria[n] else 'FAIL'}")
