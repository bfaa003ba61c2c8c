"""
Least-squares reconstruction on random models and on a full-size image.
"""
import numpy as np
import pytest

from kronsampler import SamplingClient, framepotential, recon, ProblemInstance
from kronsampler.instances import image_to_instance
from kronsampler.samplers import random_selection

from .conftest import relative_error

pytestmark = pytest.mark.slow


def _random_model(rng):
    shapes = [(int(rng.integers(3, 9)), int(rng.integers(1, 4))) for _ in range(2)]
    shapes = [(max(n, k + 1), k) for n, k in shapes]
    core = rng.standard_normal(int(np.prod([k for _, k in shapes])))
    return recon.SignalModel([rng.standard_normal(s) for s in shapes], core)


def test_noiseless_round_trip():
    rng = np.random.default_rng(0)
    for trial in range(100):
        model = _random_model(rng)
        inst = ProblemInstance(model.bases, sum(model.core_shape) + 1)
        sel = random_selection(inst, trial)

        v = recon.sample(model, sel, noise_sigma=0)
        g_hat, _ = recon.reconstruct(recon.restricted_bases(model.bases, sel), v, model.bases)
        assert relative_error(g_hat, model.core) < 1e-8


def test_monte_carlo_mse():
    rng = np.random.default_rng(1)
    model = recon.SignalModel([rng.standard_normal((7, 3)), rng.standard_normal((6, 2))],
                              rng.standard_normal(6))
    inst = ProblemInstance(model.bases, 12)
    sel = random_selection(inst, 0)

    expected = framepotential.mse(inst, sel)
    estimate = recon.monte_carlo_core_mse(model, sel, 2000, noise_sigma=1.0, seed=0)
    assert estimate == pytest.approx(expected, rel=0.10)


def _test_image(size=512):
    """Smooth shading, a few soft discs and some texture, in [0, 255]."""
    y, x = np.mgrid[0:size, 0:size] / size
    img = 90 + 60 * x + 40 * np.sin(3 * np.pi * y)
    for cx, cy, r, level in ((0.3, 0.35, 0.18, 80), (0.7, 0.6, 0.22, -50), (0.55, 0.2, 0.1, 60)):
        img += level / (1 + np.exp(((x - cx) ** 2 + (y - cy) ** 2 - r * r) * 400))
    img += 8 * np.random.default_rng(3).standard_normal((size, size))
    return np.clip(img, 0, 255)


@pytest.fixture(scope='module')
def image():
    return image_to_instance(_test_image(), 40, 40)


@pytest.fixture(scope='module')
def client():
    return SamplingClient(workers=1)


def test_image_pipeline(image, client):
    result = client.reconstruct_image(image, 400, 'ffw')
    assert result.pixels.shape == (512, 512)
    assert sum(result.metrics['sizes']) == 400
    assert min(result.metrics['sizes']) >= 40
    assert np.isfinite(result.metrics['mse'])


def test_full_budget_gives_truncated_image(image, client):
    result = client.reconstruct_image(image, 1024, 'ffw')
    assert np.allclose(result.pixels, image.truncated(), atol=1e-6)


def test_image_core_mse_ordering(image, client):
    problem = image.problem(400)
    ffw = client.reconstruct_image(image, 400, 'ffw')
    greedy = client.reconstruct_image(image, 400, 'greedyfp')

    # Core estimator error under unit noise, not pixel error
    ffw_mse = framepotential.mse(problem, ffw.selection)
    assert ffw_mse <= framepotential.mse(problem, greedy.selection)
