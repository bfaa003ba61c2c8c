import numpy as np
import pytest

from kronsampler import FactorMatrix, ProblemInstance


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def running_example():
    """The 4x2 factor with rows (1,0), (2,0), (0,1) and (0,3)."""
    return FactorMatrix([[1, 0], [2, 0], [0, 1], [0, 3]])


@pytest.fixture
def two_mode_example():
    """Modes I_2 and the column (1, 2, 1) with budget 4."""
    return ProblemInstance([np.eye(2), [[1], [2], [1]]], 4)


def signed_factor(rng, n, k):
    """Rows of a single sign, as in the sign-condition ensemble."""
    signs = rng.choice((-1.0, 1.0), size=(n, 1))
    return np.abs(rng.standard_normal((n, k))) * signs
