import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from ncx.scalars import Quaternion, rat

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def rationals(bound=20):
    return st.builds(rat, st.integers(-bound, bound), st.integers(1, bound))


def quaternions(bound=20):
    return st.builds(Quaternion, rationals(bound), rationals(bound), rationals(bound), rationals(bound))


def nonzero_quaternions(bound=20):
    return quaternions(bound).filter(lambda q: not q.is_zero())
