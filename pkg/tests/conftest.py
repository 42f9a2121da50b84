import itertools

import numpy as np
import pytest

from bellsv import BellCoefficients

CHSH = np.array([[1.0, 1.0], [1.0, -1.0]])

# Vertesi-Pal instance: 8 Alice settings, 4 Bob settings, orthogonal columns.
VERTESI_PAL = np.array(
    [
        [1, 1, 1, 1],
        [-1, 1, 1, 1],
        [1, -1, 1, 1],
        [-1, -1, 1, 1],
        [1, 1, -1, 1],
        [-1, 1, -1, 1],
        [1, -1, -1, 1],
        [-1, -1, -1, 1],
    ],
    dtype=float,
)


@pytest.fixture
def chsh():
    return BellCoefficients(CHSH)


@pytest.fixture
def identity2():
    return BellCoefficients(np.eye(2))


@pytest.fixture
def vertesi_pal():
    return BellCoefficients(VERTESI_PAL)


def brute_force_classical(mat: np.ndarray) -> float:
    """Independent oracle: maximize over all 2^(m1+m2) sign assignments."""
    m1, m2 = mat.shape
    best = -np.inf
    for a in itertools.product((-1.0, 1.0), repeat=m1):
        row = np.array(a) @ mat
        for b in itertools.product((-1.0, 1.0), repeat=m2):
            best = max(best, float(row @ np.array(b)))
    return best
