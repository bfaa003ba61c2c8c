import math

import numpy as np
import pytest

from kronsampler import recon, framepotential, ProblemInstance, Selection, IndexSet
from kronsampler.errors import (
    InvalidInputError, DimensionMismatchError, DegenerateInputError,
    SingularSelectionError, KronSizeError
)
from kronsampler.recon import SignalModel, Measurement


@pytest.fixture
def model(rng):
    return SignalModel([rng.standard_normal((6, 2)), rng.standard_normal((5, 2))],
                       rng.standard_normal(4))


@pytest.fixture
def grid():
    return Selection([IndexSet([1, 2, 4, 6], 6), IndexSet([1, 3, 5], 5)], 'manual')


def test_model_shapes(model):
    assert model.mode_sizes == (6, 5)
    assert model.core_shape == (2, 2)
    assert model.core_size == 4
    assert model.signal_size == 30


def test_model_validation(rng):
    with pytest.raises(DegenerateInputError):
        SignalModel([np.ones((4, 2))], [1, 2])
    with pytest.raises(DimensionMismatchError):
        SignalModel([rng.standard_normal((4, 2))], [1, 2, 3])


def test_synthesize_matches_explicit_kron(model):
    expected = np.kron(*model.bases) @ model.core
    assert np.allclose(recon.synthesize(model), expected, rtol=1e-12, atol=1e-12)


def test_noiseless_sample_is_restricted_signal(model, grid):
    v = recon.sample(model, grid, noise_sigma=0)
    f = recon.synthesize(model).reshape(6, 5)
    expected = f[np.ix_(grid.modes[0].zero_based, grid.modes[1].zero_based)].reshape(-1)
    assert np.allclose(v.values, expected, rtol=1e-12, atol=1e-12)
    assert len(v) == grid.grid_size
    assert v.selection is grid


def test_noiseless_reconstruction_is_exact(model, grid):
    v = recon.sample(model, grid, noise_sigma=0)
    g_hat, f_hat = recon.reconstruct(recon.restricted_bases(model.bases, grid), v, model.bases)
    assert np.allclose(g_hat, model.core, atol=1e-10)
    assert np.allclose(f_hat, recon.synthesize(model), atol=1e-10)


def test_noise_statistics():
    model = SignalModel([np.ones((1000, 1)), np.ones((100, 1))], [0.0])
    sel = Selection([IndexSet.full(1000), IndexSet.full(100)], 'manual')
    values = recon.sample(model, sel, noise_sigma=2.0, seed=11).values
    n = values.size

    assert abs(values.mean()) < 4 * 2.0 / math.sqrt(n)
    assert abs(values.var() - 4.0) < 4 * 4.0 * math.sqrt(2 / n)


def test_noise_is_reproducible(model, grid):
    a = recon.sample(model, grid, seed=3)
    b = recon.sample(model, grid, seed=3)
    assert np.array_equal(a.values, b.values)
    assert a.to_dict()['seed'] == 3


def test_negative_noise(model, grid):
    with pytest.raises(InvalidInputError):
        recon.sample(model, grid, noise_sigma=-1)


def test_wrong_universe(model):
    sel = Selection([IndexSet([1, 2], 7), IndexSet([1, 2], 5)], 'manual')
    with pytest.raises(DimensionMismatchError):
        recon.sample(model, sel)


def test_singular_reconstruction(model):
    sel = Selection([IndexSet([1], 6), IndexSet([1, 2], 5)], 'manual')
    v = recon.sample(model, sel, noise_sigma=0)
    with pytest.raises(SingularSelectionError) as e:
        recon.reconstruct(recon.restricted_bases(model.bases, sel), v, model.bases)
    assert e.value.mode == 1


def test_measurement_length_must_match_grid(grid):
    with pytest.raises(DimensionMismatchError):
        Measurement(np.zeros(5), selection=grid)


def test_error_metrics():
    exact = recon.error_metrics([1, 2, 3], [1, 2, 3])
    assert exact['mse'] == 0
    assert exact['psnr'] == math.inf
    assert exact['relative_error'] == 0

    off = recon.error_metrics([0, 10], [1, 10])
    assert off['mse'] == 0.5
    assert off['psnr'] == pytest.approx(10 * math.log10(100 / 0.5))
    assert off['relative_error'] == pytest.approx(0.1)

    assert recon.error_metrics([0, 0], [1, 0])['relative_error'] is None
    assert recon.error_metrics([2, 2], [1, 2])['psnr'] is None


def test_monte_carlo_mse_matches_closed_form(model, grid):
    inst = ProblemInstance([np.asarray(b) for b in model.bases], grid.budget)
    expected = framepotential.mse_factorized(inst, grid)
    estimate = recon.monte_carlo_core_mse(model, grid, 3000, noise_sigma=1.0, seed=0)
    assert estimate == pytest.approx(expected, rel=0.15)


@pytest.mark.parametrize('shapes', [
    [(6, 2), (5, 2)],
    [(16, 3), (16, 2), (16, 2)],
    [(64, 4), (64, 3)],
])
def test_mode_wise_matches_explicit_pseudoinverse(rng, shapes):
    bases = [rng.standard_normal(s) for s in shapes]
    model = SignalModel(bases, rng.standard_normal(int(np.prod([k for _, k in shapes]))))
    sel = Selection([IndexSet.from_zero_based(rng.choice(n, k + 3, replace=False), n)
                     for n, k in shapes], 'manual')
    v = recon.sample(model, sel, noise_sigma=1.0, seed=5)
    restricted = recon.restricted_bases(model.bases, sel)

    g_fast, f_fast = recon.reconstruct(restricted, v, model.bases)
    g_slow, f_slow = recon.reconstruct_explicit(restricted, v, model.bases)
    assert np.allclose(g_fast, g_slow, rtol=1e-8, atol=1e-10)
    assert np.allclose(f_fast, f_slow, rtol=1e-8, atol=1e-9)


def test_explicit_reconstruction_guards(model, grid):
    v = recon.sample(model, grid, noise_sigma=0)
    restricted = recon.restricted_bases(model.bases, grid)
    with pytest.raises(KronSizeError):
        recon.reconstruct_explicit(restricted, v, model.bases, max_entries=100)

    sel = Selection([IndexSet([1], 6), IndexSet([1, 2], 5)], 'manual')
    v = recon.sample(model, sel, noise_sigma=0)
    with pytest.raises(SingularSelectionError) as e:
        recon.reconstruct_explicit(recon.restricted_bases(model.bases, sel), v, model.bases)
    assert e.value.mode == 1
