"""
Forward model, sampling and least-squares reconstruction of signals that
follow ``f = (U_1 ⊗ ... ⊗ U_R) g``.
"""
import functools
import logging
import math
import operator

import numpy as np

from . import helpers, linalg
from .errors import (
    InvalidInputError, DimensionMismatchError, DegenerateInputError,
    SingularSelectionError
)
from .linalg import IndexSet

DEFAULT_NOISE_SIGMA = 1.0

_log = logging.getLogger(__name__)


class SignalModel:
    """
    The bases ``U_r`` (``N_r x K_r``, full column rank) of every mode and
    the core ``g`` of length ``prod(K_r)``.
    """
    def __init__(self, bases, core):
        self.bases = tuple(linalg.as_matrix(u, name='basis {}'.format(r))
                           for r, u in enumerate(bases, start=1))
        if not self.bases:
            raise DimensionMismatchError('signal model bases', 'at least one', 0)

        for r, u in enumerate(self.bases, start=1):
            rank = linalg.matrix_rank(u)
            if rank < u.shape[1]:
                raise DegenerateInputError(
                    'basis {} has rank {} but {} columns'.format(r, rank, u.shape[1]))

        self.core = linalg.as_vector(core, self.core_size, name='core')

    @property
    def mode_sizes(self):
        return tuple(u.shape[0] for u in self.bases)

    @property
    def core_shape(self):
        return tuple(u.shape[1] for u in self.bases)

    @property
    def core_size(self):
        return functools.reduce(operator.mul, self.core_shape, 1)

    @property
    def signal_size(self):
        return functools.reduce(operator.mul, self.mode_sizes, 1)

    def __repr__(self):
        return 'SignalModel(modes={}, core={})'.format(
            list(self.mode_sizes), list(self.core_shape))


class Measurement:
    """
    The sampled values ``v`` on the grid of a selection, together with how
    the noise was drawn. ``selection`` is the `Selection` used, if known.
    """
    def __init__(self, values, noise_sigma=0.0, seed=None, selection=None):
        self.values = linalg.as_vector(values, name='measurement')
        self.noise_sigma = float(noise_sigma)
        self.seed = seed
        self.selection = selection

        if selection is not None and self.values.size != selection.grid_size:
            raise DimensionMismatchError(
                'measurement length', selection.grid_size, self.values.size)

    def to_dict(self):
        """The JSON sidecar describing how the values were measured."""
        return {
            'noise_sigma': self.noise_sigma,
            'seed': self.seed,
            'length': int(self.values.size),
            'selection': None if self.selection is None else self.selection.to_dict(),
        }

    def __len__(self):
        return self.values.size


def synthesize(model):
    """The full signal ``f`` of length ``prod(N_r)``."""
    return linalg.kron_apply(model.bases, model.core)


def restricted_bases(bases, sel):
    """The rows of every basis kept by the `Selection` ``sel``."""
    modes = sel.modes if hasattr(sel, 'modes') else sel
    if len(modes) != len(bases):
        raise DimensionMismatchError('selection modes', len(bases), len(modes))
    return [linalg.restrict_rows(u, s) for u, s in zip(bases, modes)]


def _check_universes(model, sel):
    for r, (n, s) in enumerate(zip(model.mode_sizes, sel.modes), start=1):
        if not isinstance(s, IndexSet) or s.universe != n:
            raise DimensionMismatchError(
                'selection universe of mode {}'.format(r), n, getattr(s, 'universe', s))


def sample(model, sel, noise_sigma=DEFAULT_NOISE_SIGMA, seed=None):
    """
    Measures ``model`` on the grid selected by ``sel`` and adds white
    Gaussian noise of standard deviation ``noise_sigma``.

    The noiseless part is computed as the Kronecker product of the
    restricted bases applied to the core, never through the full signal.
    """
    if len(sel.modes) != len(model.bases):
        raise DimensionMismatchError('selection modes', len(model.bases), len(sel.modes))
    _check_universes(model, sel)

    noise_sigma = float(noise_sigma)
    if noise_sigma < 0:
        raise InvalidInputError('noise_sigma must be non-negative, not {}'.format(noise_sigma))

    values = linalg.kron_apply(restricted_bases(model.bases, sel), model.core)
    if noise_sigma > 0:
        rng = helpers.make_rng(seed)
        values = values + rng.normal(0.0, noise_sigma, size=values.size)

    return Measurement(values, noise_sigma,
                       seed if isinstance(seed, (int, np.integer)) else None, sel)


def reconstruct(bases_restricted, v, bases_full):
    """
    Least-squares estimate of the core and the full signal.

    :param bases_restricted: the restricted basis ``Psi_r`` of every mode.
    :param v: the `Measurement` (or its values).
    :param bases_full: the full bases ``U_r`` used to resynthesize.
    :return: the pair ``(g_hat, f_hat)``.
    """
    values = v.values if isinstance(v, Measurement) else linalg.as_vector(v, name='measurement')
    if len(bases_restricted) != len(bases_full):
        raise DimensionMismatchError(
            'restricted bases', len(bases_full), len(bases_restricted))

    inverses = []
    for r, psi in enumerate(bases_restricted, start=1):
        psi = np.asarray(psi, dtype=np.float64)
        inv, rank = linalg.pinv(psi, return_rank=True)
        if rank < psi.shape[1]:
            raise SingularSelectionError(r, rank, psi.shape[1])
        inverses.append(inv)

    g_hat = linalg.kron_apply(inverses, values)
    f_hat = linalg.kron_apply(bases_full, g_hat)
    return g_hat, f_hat


def reconstruct_explicit(bases_restricted, v, bases_full, *,
                         max_entries=linalg.DEFAULT_KRON_MAX_ENTRIES):
    """
    Same estimate as `reconstruct`, but through the pseudoinverse of the
    explicit Kronecker product of the restricted bases.

    Only usable on small instances. `KronSizeError` is raised as soon as
    either explicit product would hold more than ``max_entries`` entries.
    """
    values = v.values if isinstance(v, Measurement) else linalg.as_vector(v, name='measurement')
    if len(bases_restricted) != len(bases_full):
        raise DimensionMismatchError(
            'restricted bases', len(bases_full), len(bases_restricted))

    psi = linalg.kron_all(bases_restricted, max_entries=max_entries)
    full = linalg.kron_all(bases_full, max_entries=max_entries)
    if values.size != psi.shape[0]:
        raise DimensionMismatchError('measurement', psi.shape[0], values.size)

    inv, rank = linalg.pinv(psi, return_rank=True)
    if rank < psi.shape[1]:
        # the product is rank deficient iff one of its factors is
        for r, m in enumerate(bases_restricted, start=1):
            mode_rank = linalg.matrix_rank(m)
            if mode_rank < np.shape(m)[1]:
                raise SingularSelectionError(r, mode_rank, np.shape(m)[1])

    g_hat = inv @ values
    return g_hat, full @ g_hat


def error_metrics(f, f_hat):
    """
    Compares a reconstruction against the reference signal.

    ``relative_error`` is `None` when ``f`` is zero, and ``psnr`` is `None`
    when ``f`` is constant (it has no dynamic range). A perfect
    reconstruction has infinite PSNR.
    """
    f = np.asarray(f, dtype=np.float64).reshape(-1)
    f_hat = np.asarray(f_hat, dtype=np.float64).reshape(-1)
    if f.size != f_hat.size:
        raise DimensionMismatchError('reconstructed signal', f.size, f_hat.size)

    diff = f - f_hat
    mse = float(np.mean(diff * diff))

    norm = float(np.linalg.norm(f))
    relative = float(np.linalg.norm(diff)) / norm if norm > 0 else None

    peak = float(np.max(f) - np.min(f)) if f.size else 0.0
    if mse == 0:
        psnr = math.inf
    elif peak > 0:
        psnr = 10 * math.log10(peak * peak / mse)
    else:
        psnr = None

    return {'mse': mse, 'relative_error': relative, 'psnr': psnr}


def monte_carlo_core_mse(model, sel, draws, noise_sigma=DEFAULT_NOISE_SIGMA, seed=None):
    """
    Mean of ``||g - g_hat|| ** 2`` over ``draws`` noisy measurements.

    Draw ``d`` uses the seed ``seed + d``, so the estimate does not depend
    on how draws are split among workers. With unit noise it converges to
    ``tr(T^-1)`` of the selection.
    """
    psi = restricted_bases(model.bases, sel)
    total = 0.0
    for d in range(int(draws)):
        v = sample(model, sel, noise_sigma, helpers.trial_seed(seed, d))
        g_hat, _ = reconstruct(psi, v, model.bases)
        err = g_hat - model.core
        total += float(err @ err)

    _log.debug('Monte-Carlo core MSE over %d draws: %.6g', draws, total / draws)
    return total / draws
