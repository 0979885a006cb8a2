import sys
from pathlib import Path

import pytest

from projgenus.profile import AlgebraProfile

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def exr1():
    return AlgebraProfile.from_ranks(12, ((2, 4), (2, 2)), ((3, 9), (1, 1)))


@pytest.fixture
def second():
    return AlgebraProfile.from_ranks(12, ((2, 8), (2, 1)), ((2, 4), (4, 1)))


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    if oracles.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in oracles.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
