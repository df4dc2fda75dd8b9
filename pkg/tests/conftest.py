from hypothesis import settings, strategies as st

from braidaut.braids import BraidWord
from braidaut.freegroup import FreeWord

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def free_words(rank: int, max_size: int = 12):
    letters = st.integers(1, rank).flatmap(lambda i: st.sampled_from((i, -i)))
    return st.lists(letters, max_size=max_size).map(lambda xs: FreeWord(rank, tuple(xs)))


def braid_words(strands: int, max_size: int = 10):
    letters = st.integers(1, strands - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    return st.lists(letters, max_size=max_size).map(lambda xs: BraidWord(strands, tuple(xs)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
