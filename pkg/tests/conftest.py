import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from udgdom.geometry import PointSet, build_udg  # noqa: E402

ACCEPTANCE_LINES = []


def graph(coords, radius=1.0):
    return build_udg(PointSet.from_coords(coords, radius))


@pytest.fixture
def path3():
    return graph([(0, 0), (1, 0), (2, 0)])


@pytest.fixture
def edge():
    return graph([(0, 0), (0.5, 0)])


@pytest.fixture
def single():
    return graph([(0, 0)])


@pytest.fixture
def star():
    # centre plus four leaves, leaves pairwise farther than 1 apart
    return graph([(0, 0), (0.9, 0), (-0.9, 0), (0, 0.9), (0, -0.9)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
