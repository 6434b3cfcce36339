import pytest
from hypothesis import settings
from hypothesis import strategies as st

from gogcalc.freegroup import FreeWord
from gogcalc.lab import build_gamma
from gogcalc.ordinal import Ordinal

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")


@st.composite
def ordinals(draw, max_exp=3, max_coef=5):
    """Ordinals below w^(max_exp+1), built from explicit CNF terms."""
    exps = draw(st.lists(st.integers(0, max_exp), unique=True, max_size=max_exp + 1))
    return Ordinal([(e, draw(st.integers(1, max_coef))) for e in sorted(exps, reverse=True)])


@st.composite
def raw_letters(draw, gens=(0, 1, 2), max_size=12):
    n = draw(st.integers(0, max_size))
    return [(Ordinal.of(draw(st.sampled_from(gens))), draw(st.sampled_from((1, -1)))) for _ in range(n)]


@st.composite
def freewords(draw, gens=(0, 1, 2), max_size=12):
    return FreeWord(draw(raw_letters(gens, max_size)))


@pytest.fixture(scope="session")
def gamma4():
    return build_gamma(4).graph


@pytest.fixture(scope="session")
def gamma6():
    return build_gamma(6).graph


CRITERIA = {}
SESSION = {}


def pytest_sessionstart(session):
    import time
    SESSION["start"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    import time
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[n])
    if "start" in SESSION:
        terminalreporter.write_line(f"suite wall time: {time.perf_counter() - SESSION['start']:.1f}s (limit 300s)")
