from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from qlogops.gf2 import BinMatrix
from qlogops.pauli import GeneratorSet, PauliVector

FIXTURES = Path(__file__).parent / "fixtures"

HAMMING_H = ["1010101", "0110011", "0001111"]
FIVE_QUBIT_STABILIZERS = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
FIVE_QUBIT_NORMALIZER = FIVE_QUBIT_STABILIZERS + ["XXXXX", "ZZZZZ"]


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def random_binmatrix(rng, rows, cols):
    return BinMatrix.from_array(rng.integers(0, 2, size=(rows, cols)).reshape(rows, cols))


@st.composite
def pauli_vectors(draw, n=None, max_n=8):
    if n is None:
        n = draw(st.integers(0, max_n))
    z = draw(st.integers(0, (1 << n) - 1))
    x = draw(st.integers(0, (1 << n) - 1))
    return PauliVector(n, z, x)


@st.composite
def generator_sets(draw, max_n=8, max_m=10):
    n = draw(st.integers(0, max_n))
    m = draw(st.integers(0, max_m))
    gens = [draw(pauli_vectors(n=n)) for _ in range(m)]
    return GeneratorSet(n, gens)


@st.composite
def bin_matrices(draw, max_rows=12, max_cols=12):
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(0, max_cols))
    data = [draw(st.integers(0, (1 << cols) - 1)) for _ in range(rows)]
    return BinMatrix(data, cols)


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[number])
