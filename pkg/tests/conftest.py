import sys

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from thompsonf.census import bfs_ball
from thompsonf.words import GENERATORS, Letter

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

generator_letters = st.sampled_from(GENERATORS)
x0x1_words = st.lists(generator_letters, max_size=30).map(tuple)
strongly_positive_words = st.lists(
    st.integers(min_value=1, max_value=9).map(lambda i: Letter(i, 1)), max_size=10
).map(tuple)
general_words = st.lists(
    st.builds(Letter, st.integers(min_value=0, max_value=8), st.sampled_from((1, -1))), max_size=12
).map(tuple)


@pytest.fixture(scope="session")
def ball5():
    return bfs_ball(5)


@pytest.fixture(scope="session")
def ball8():
    return bfs_ball(8)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
