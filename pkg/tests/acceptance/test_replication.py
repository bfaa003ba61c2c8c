"""
Ordinal comparisons of the mean MSE of each sampler over random ensembles.
"""
import numpy as np
import pytest

from kronsampler import framepotential, samplers, suites
from kronsampler.errors import SingularSelectionError
from kronsampler.instances import EnsembleSpec

pytestmark = pytest.mark.slow


def _mse(inst, sel):
    try:
        return framepotential.mse_factorized(inst, sel)
    except SingularSelectionError:
        return np.inf


def test_vector_ensemble():
    spec = EnsembleSpec('signed', [suites.VECTOR_SHAPE], seed=0, trials=20, unit_rows=True)
    for budget in (50, 80, 120, 160, 200):
        ffw, frame_sense, random = [], [], []
        for t, inst in spec.instances(budget):
            ffw.append(_mse(inst, samplers.select('ffw', inst)))
            frame_sense.append(_mse(inst, samplers.select('framesense', inst)))
            random.extend(_mse(inst, samplers.select('random', inst, 1000 * t + d))
                          for d in range(10))

        assert np.mean(ffw) <= 1.10 * np.mean(frame_sense), budget
        assert np.mean(ffw) <= np.median(random), budget


def test_tensor_ensemble():
    spec = EnsembleSpec('signed', suites.TENSOR_SHAPES, seed=0, trials=20)
    for budget in (90, 120, 150):
        ffw, greedy = [], []
        for _, inst in spec.instances(budget):
            ffw.append(_mse(inst, samplers.select('ffw', inst)))
            greedy.append(_mse(inst, samplers.select('greedyfp', inst)))

        assert np.mean(ffw) <= np.mean(greedy), budget
