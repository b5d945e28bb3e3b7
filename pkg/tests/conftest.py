import numpy as np
import pytest

from hypothesis import strategies as st


@pytest.fixture
def rng():
    return np.random.default_rng(20141016)


finite = st.floats(-1e3, 1e3, allow_nan=False)
unit = st.floats(0.0, 1.0)
angle = st.floats(-2 * np.pi, 2 * np.pi)


@st.composite
def complex_vectors(draw):
    parts = [draw(finite) for _ in range(4)]
    return np.array([parts[0] + 1j * parts[1], parts[2] + 1j * parts[3]])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
