import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from posetdual import Poset, antichain, chain, direct_sum  # noqa: E402

ACCEPTANCE = {}


def pytest_addoption(parser):
    parser.addoption(
        "--stretch",
        action="store_true",
        default=False,
        help="also run the classification sweep over all posets with up to 5 elements",
    )


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda k: (int(k.split()[0]), k)):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


@pytest.fixture
def record():
    def _record(name, ok, detail=""):
        ACCEPTANCE[name] = (bool(ok), detail)
        return ok

    return _record


@pytest.fixture
def V():
    return Poset(3, [(2, 0), (2, 1)])


@pytest.fixture
def LAM():
    return Poset(3, [(0, 2), (1, 2)])


@pytest.fixture
def N():
    return Poset(4, [(0, 2), (1, 2), (1, 3)])


@pytest.fixture
def C1():
    return chain(1)


@pytest.fixture
def C2():
    return chain(2)


@pytest.fixture
def C3():
    return chain(3)


@pytest.fixture
def A2():
    return antichain(2)


@pytest.fixture
def C2C2():
    return direct_sum(chain(2), chain(2))
