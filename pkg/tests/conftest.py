import math

import pytest
from hypothesis import strategies as st

from billiard_ladder.core import make_state
from billiard_ladder.errors import ZeroFunctionError

FAMILIES = [("iso", "default"), ("equi", "cos"), ("equi", "sin")]

ACCEPTANCE_LINES = []


@st.composite
def states(draw, kinds=FAMILIES, max_n=6, max_span=12):
    kind, family = draw(st.sampled_from(kinds))
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(n + 1, n + max_span))
    if family == "sin" and m == 2 * n:
        m += 1
    return make_state(kind, family, m, n)


def interior_points(kind, rng, count):
    """Rejection-sample uniform points inside the triangle."""
    out = []
    height = math.pi if kind == "iso" else math.sqrt(3) * math.pi / 2
    while len(out) < count:
        x, y = rng.uniform(0, math.pi), rng.uniform(0, height)
        if kind == "iso" and 0 < y < x:
            out.append((x, y))
        elif kind == "equi" and y < math.sqrt(3) * min(x, math.pi - x):
            out.append((x, y))
    return out


def all_states(max_n=6, max_span=12, kinds=FAMILIES):
    out = []
    for kind, family in kinds:
        for n in range(1, max_n + 1):
            for m in range(n + 1, n + max_span + 1):
                try:
                    out.append(make_state(kind, family, m, n))
                except ZeroFunctionError:
                    pass
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    import random

    return random.Random(20240611)
