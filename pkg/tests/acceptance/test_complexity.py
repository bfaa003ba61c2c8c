"""
Run time of FFW does not depend on the budget and grows slowly with the
number of rows, unlike the worst-out greedy removal.
"""
import numpy as np
import pytest

from kronsampler import FactorMatrix
from kronsampler.samplers import ffw_vector, frame_sense

from .conftest import min_time_ns

pytestmark = pytest.mark.slow


def _factor(n, k=40, seed=0):
    return np.random.default_rng(seed).standard_normal((n, k))


def _timed(algorithm, matrix, budget, repeats):
    # A fresh factor per call keeps the cached Gram matrix inside the timing
    return min_time_ns(lambda: algorithm(FactorMatrix(matrix), budget), repeats)


def test_ffw_time_is_budget_independent():
    p = _factor(2000)
    ffw = [_timed(ffw_vector, p, budget, 20) for budget in (40, 500, 1000)]
    assert max(ffw) < 2 * min(ffw)

    # 1960 removals against 1000, the growth is bounded by their ratio
    greedy = [_timed(frame_sense, p, budget, 3) for budget in (40, 500, 1000)]
    assert greedy[0] > 1.5 * greedy[2]


def test_scaling_in_rows():
    small, large = _factor(100), _factor(400)
    ffw_ratio = _timed(ffw_vector, large, 200, 50) / _timed(ffw_vector, small, 50, 50)
    greedy_ratio = _timed(frame_sense, large, 200, 10) / _timed(frame_sense, small, 50, 10)

    assert ffw_ratio < 8
    assert greedy_ratio > ffw_ratio
