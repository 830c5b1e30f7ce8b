from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from shapegrowth.corpus import random_shape
from shapegrowth.shape import Shape

FIG1 = Shape({(1, 1), (1, 2), (1, 3), (2, 1)})


@st.composite
def shapes(draw, max_size: int = 30) -> Shape:
    """Connected shapes via seeded Eden growth."""
    n = draw(st.integers(1, max_size))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_shape(random.Random(seed), n)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)


# Result lines of the acceptance criteria, printed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
