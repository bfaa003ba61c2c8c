import pytest

from kronsampler import suites
from kronsampler.errors import InvalidInputError


def test_budget_grid():
    assert suites.budget_grid(45, 60, 5) == [45, 50, 55, 60]
    assert suites.budget_grid(45, 62, 5)[-1] == 60
    with pytest.raises(InvalidInputError):
        suites.budget_grid(10, 5, 1)


def test_vector_suite():
    suite = suites.vector_suite(trials=4)
    (plan,) = suite.plans
    assert plan.spec.mode_shapes == ((200, 40),)
    assert plan.budgets[0] == 45 and plan.budgets[-1] == 200
    assert plan.algorithms == ['ffw', 'framesense', 'random']
    assert suite.trial_count == 4
    assert plan.spec.unit_rows
    assert not suites.vector_suite(trials=1, unit_rows=False).plans[0].spec.unit_rows


def test_tensor_suite():
    (plan,) = suites.tensor_suite(trials=2).plans
    assert plan.budgets[0] == 45
    assert plan.budgets[-1] <= 180
    assert 'greedyfp' in plan.algorithms


def test_runtime_suites():
    vector = suites.runtime_vector_suite()
    assert [p.spec.mode_shapes[0][0] for p in vector.plans] == [100, 150, 200, 250, 300, 350, 400]
    assert [p.budgets for p in vector.plans][0] == [50]

    tensor = suites.runtime_tensor_suite()
    assert tensor.plans[0].spec.mode_shapes == ((30, 10), (40, 20), (50, 15))
    # Half of the 120 rows is 60, above the floors of 45
    assert tensor.plans[0].budgets == [60]


def test_bounds_suite():
    vector, tensor = suites.bounds_suite(trials=1).plans
    assert vector.bound == 'gamma'
    assert tensor.bound == 'tensor'


def test_plan_validation():
    with pytest.raises(InvalidInputError):
        suites.custom_suite([(10, 2)], [4], ['magic'])
    with pytest.raises(InvalidInputError):
        suites.custom_suite([(10, 2)], [11], ['ffw'])
    with pytest.raises(InvalidInputError):
        suites.custom_suite([(10, 2)], [], ['ffw'])
