import math

import numpy as np
import pytest

from jknotcs import KnotParams, geometric_component

ACCEPTANCE_LINES: list[str] = []

SMALL_KNOTS = [KnotParams(n, m) for n in range(1, 4) for m in range(1, 4)]
TABLE_KNOTS = [KnotParams(n, m) for n in range(1, 5) for m in range(1, n + 1)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240617)


@pytest.fixture(scope="session")
def comp21():
    return geometric_component(KnotParams(2, 1))


def unit(alpha):
    return complex(math.cos(alpha / 2), math.sin(alpha / 2))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
