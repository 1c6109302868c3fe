import numpy as np
import pytest

from schurbounds.hermitian import validate_hermitian
from schurbounds.sampling import make_rng, random_hermitian

MATRIX_A = [[2, 1, 1], [1, 2, 1], [1, 1, 3]]
MATRIX_B = [[1, 2, 3], [2, 1, 4], [3, 4, 1]]

_criteria_lines = []


@pytest.fixture
def A():
    return validate_hermitian(MATRIX_A)


@pytest.fixture
def B():
    return validate_hermitian(MATRIX_B)


@pytest.fixture
def criterion():
    """Record a one-line PASS/FAIL for an acceptance criterion."""

    def record(number, ok, detail=""):
        _criteria_lines.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return record


def random_matrices(seed, n, count, scales=(0.1, 1.0, 100.0)):
    """Mixed real/complex Hermitian arrays cycling through ``scales``."""
    rng = make_rng(seed)
    for j in range(count):
        yield random_hermitian(rng, n, scales[j % len(scales)], complex_entries=(j % 2 == 0))


def brute_eigvalsh(h):
    """Second opinion from LAPACK, used only inside tests."""
    return np.linalg.eigvalsh(np.asarray(h))


def pytest_terminal_summary(terminalreporter):
    if _criteria_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criteria_lines:
            terminalreporter.write_line(line)
