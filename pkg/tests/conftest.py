import pytest
from hypothesis import strategies as st

from pointfree.frames import CofiniteFrame, FiniteFrame
from pointfree.order import FinitePoset, boolean_lattice, chain, downset_lattice


@pytest.fixture
def two():
    return chain(2)


@pytest.fixture
def chain3():
    # ids: 0 = bottom, 1 = middle m, 2 = top
    return chain(3)


@pytest.fixture
def diamond():
    # ids: 0 = bottom, 1 and 2 = atoms a and b, 3 = top
    return boolean_lattice(2)


@pytest.fixture
def cofinite():
    return CofiniteFrame(16)


@pytest.fixture
def diamond_frame(diamond):
    return FiniteFrame(diamond)


@st.composite
def posets(draw, max_points=4):
    """Random posets: a random set of pairs i < j (so acyclic), transitively closed."""
    n = draw(st.integers(1, max_points))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return FinitePoset.from_relation(n, chosen)


@st.composite
def downset_frames(draw, max_points=4):
    return downset_lattice(draw(posets(max_points)))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
