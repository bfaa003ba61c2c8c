import numpy as np
import pytest

from kronsampler import ProblemInstance, IndexSet, framepotential
from kronsampler.errors import InfeasibleBudgetError
from kronsampler.samplers import ffw_vector, ffw_tensor, FFW

from ..conftest import signed_factor


def test_running_example(running_example):
    sel = ffw_vector(running_example, 2)
    assert sel.modes == (IndexSet([1, 3], 4),)
    assert sel.algorithm == FFW
    assert framepotential.frame_potential(running_example, sel.modes[0]) == 2


def test_keeps_lowest_scores(rng):
    p = rng.standard_normal((30, 5))
    scores = framepotential.ffw_scores(p)
    sel = ffw_vector(p, 12).modes[0]
    kept = scores[sel.zero_based]
    dropped = scores[sel.complement().zero_based]
    assert kept.max() <= dropped.min()


def test_full_budget_keeps_everything(running_example):
    assert ffw_vector(running_example, 4).modes[0] == IndexSet.full(4)


def test_ties_prefer_lower_index():
    sel = ffw_vector(np.ones((5, 1)), 2)
    assert sel.modes[0].indices == (1, 2)


def test_budget_out_of_range(running_example):
    with pytest.raises(InfeasibleBudgetError):
        ffw_vector(running_example, 1)
    with pytest.raises(InfeasibleBudgetError):
        ffw_vector(running_example, 5)


def test_deterministic(rng):
    p = signed_factor(rng, 40, 6)
    assert ffw_vector(p, 20) == ffw_vector(p, 20)


def test_tensor_two_mode_example(two_mode_example):
    sel = ffw_tensor(two_mode_example)
    assert sel.modes == (IndexSet([1, 2], 2), IndexSet([1, 3], 3))
    assert framepotential.frame_potential_product(two_mode_example, sel) == 8


def test_tensor_extra_slots_follow_normalized_scores():
    # 1/4 per row in the second mode against 1/3 in the first
    inst = ProblemInstance([np.ones((3, 1)), np.ones((4, 1))], 3)
    sel = ffw_tensor(inst)
    assert sel.modes == (IndexSet([1], 3), IndexSet([1, 2], 4))


def test_tensor_equal_scores_favour_lower_mode():
    inst = ProblemInstance([np.ones((4, 1)), np.ones((4, 1))], 3)
    sel = ffw_tensor(inst)
    assert sel.modes == (IndexSet([1, 2], 4), IndexSet([1], 4))


def test_tensor_respects_floors_and_budget(rng):
    factors = [signed_factor(rng, n, k) for n, k in ((12, 3), (9, 4), (15, 2))]
    for budget in (9, 14, 25, 36):
        sel = ffw_tensor(ProblemInstance(factors, budget))
        assert sel.budget == budget
        for s, (n, k) in zip(sel.modes, ((12, 3), (9, 4), (15, 2))):
            assert k <= len(s) <= n


def test_tensor_single_mode_matches_vector(rng):
    p = rng.standard_normal((25, 4))
    assert ffw_tensor(ProblemInstance([p], 10)).modes == ffw_vector(p, 10).modes
