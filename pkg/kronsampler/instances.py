"""
Random ensembles of factor matrices and the conversion of grayscale images
into two-mode instances.
"""
import json
import logging

import numpy as np
import scipy.linalg

from . import framepotential, helpers, linalg
from .errors import InvalidInputError, DimensionMismatchError
from .recon import Measurement, SignalModel
from .types import FactorMatrix, ProblemInstance

GAUSSIAN = 'gaussian'
SIGN_CONDITION = 'sign-condition'

# Names accepted on the command line for each ensemble
KIND_ALIASES = {
    'gaussian': GAUSSIAN,
    'sign-condition': SIGN_CONDITION,
    'signed': SIGN_CONDITION,
}

# Regenerations allowed before giving up on a non-orthogonal draw
_MAX_REDRAWS = 100

_log = logging.getLogger(__name__)


class EnsembleSpec:
    """
    Describes a random ensemble of instances.

    Arguments
        kind (`str`):
            ``gaussian`` for i.i.d. standard normal entries, or
            ``sign-condition`` (alias ``signed``) for rows of one sign.

        mode_shapes (`list`):
            One ``(N_r, K_r)`` pair per mode.

        seed (`int`, optional):
            Base seed. Trial ``t`` uses ``seed + t``.

        trials (`int`, optional):
            Number of instances in the ensemble.

        unit_rows (`bool`, optional):
            Scale every row of every factor to unit Euclidean norm after
            drawing it. Row signs, and with them the sign condition, are
            kept.
    """
    def __init__(self, kind, mode_shapes, seed=None, trials=1, *, unit_rows=False):
        try:
            self.kind = KIND_ALIASES[str(kind).lower()]
        except KeyError:
            raise InvalidInputError(
                'Unknown ensemble kind {!r}, expected one of: {}'
                .format(kind, ', '.join(sorted(KIND_ALIASES)))) from None

        self.mode_shapes = tuple(tuple(int(x) for x in s) for s in mode_shapes)
        if not self.mode_shapes:
            raise InvalidInputError('An ensemble needs at least one mode shape')
        for n, k in self.mode_shapes:
            if not n > k >= 1:
                raise DimensionMismatchError('mode shape', 'N > K >= 1', (n, k))

        self.seed = None if seed is None else int(seed)
        self.trials = int(trials)
        if self.trials < 1:
            raise InvalidInputError('An ensemble needs at least one trial')
        self.unit_rows = bool(unit_rows)

    def to_dict(self):
        return {
            'kind': self.kind,
            'mode_shapes': [list(s) for s in self.mode_shapes],
            'seed': self.seed,
            'trials': self.trials,
            'unit_rows': self.unit_rows,
        }

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(d['kind'], d['mode_shapes'], d.get('seed'), d.get('trials', 1),
                       unit_rows=d.get('unit_rows', False))
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInputError('Malformed ensemble spec: {}'.format(e)) from None

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text):
        try:
            return cls.from_dict(json.loads(text))
        except ValueError as e:
            raise InvalidInputError('Ensemble spec is not valid JSON: {}'.format(e)) from None

    def generate(self, trial=0):
        """The factors of trial number ``trial``."""
        if self.kind == GAUSSIAN:
            return gen_gaussian(self, trial)
        return gen_sign_condition(self, trial)

    def instances(self, budget):
        """Yields ``(trial, ProblemInstance)`` for every trial."""
        for t in range(self.trials):
            yield t, ProblemInstance(self.generate(t), budget)

    def __repr__(self):
        return 'EnsembleSpec({}, {}, seed={}, trials={}{})'.format(
            self.kind, list(self.mode_shapes), self.seed, self.trials,
            ', unit_rows=True' if self.unit_rows else '')


def _scaled_rows(m, unit_rows):
    if not unit_rows:
        return m
    norms = np.linalg.norm(m, axis=1, keepdims=True)
    return m / np.where(norms > 0, norms, 1.0)


def gen_gaussian(spec, trial=0):
    """Factors with i.i.d. standard normal entries, one per mode shape."""
    rng = helpers.make_rng(helpers.trial_seed(spec.seed, trial))
    return [FactorMatrix(_scaled_rows(rng.standard_normal((n, k)), spec.unit_rows),
                         name='mode {}'.format(r))
            for r, (n, k) in enumerate(spec.mode_shapes, start=1)]


def _sign_condition_factor(rng, n, k, unit_rows=False):
    for _ in range(_MAX_REDRAWS):
        signs = rng.choice((-1.0, 1.0), size=(n, 1))
        factor = FactorMatrix(_scaled_rows(np.abs(rng.standard_normal((n, k))) * signs, unit_rows))
        if framepotential.is_non_orthogonal(factor):
            return factor
        _log.debug('Redrawing an orthogonal %dx%d sign-condition factor', n, k)

    raise InvalidInputError(
        'Could not draw a non-orthogonal {}x{} factor'.format(n, k))


def gen_sign_condition(spec, trial=0):
    """
    Factors whose rows have entries of a single sign and whose columns are
    not orthogonal: absolute standard normal values times a random sign
    per row, optionally scaled to unit norm.
    """
    rng = helpers.make_rng(helpers.trial_seed(spec.seed, trial))
    factors = []
    for r, (n, k) in enumerate(spec.mode_shapes, start=1):
        f = _sign_condition_factor(rng, n, k, spec.unit_rows)
        f.name = 'mode {}'.format(r)
        factors.append(f)
    return factors


class ImageInstance:
    """
    A grayscale image ``X`` together with the factors of its truncated
    decomposition ``X ~ U_1 G U_2^T``. Rows are mode 1 and columns mode 2.

    ``requested`` holds the ranks asked for, which may exceed ``k1`` and
    ``k2`` when the image has a lower numerical rank.
    """
    def __init__(self, pixels, k1, k2, u1, u2, core, *, requested=None):
        self.pixels = pixels
        self.k1 = k1
        self.k2 = k2
        self.u1 = FactorMatrix(u1, name='rows')
        self.u2 = FactorMatrix(u2, name='columns')
        self.core = core
        self.requested = requested or (k1, k2)

    @property
    def shape(self):
        return self.pixels.shape

    @property
    def reduced(self):
        return self.requested != (self.k1, self.k2)

    def truncated(self):
        """``U_1 G U_2^T``, the best rank-limited approximation of the image."""
        return self.u1.matrix @ self.core @ self.u2.matrix.T

    def model(self):
        return SignalModel([self.u1.matrix, self.u2.matrix], self.core.reshape(-1))

    def problem(self, budget):
        return ProblemInstance([self.u1, self.u2], budget)

    def sample(self, sel):
        """The noiseless pixel values on the grid selected by ``sel``."""
        rows, cols = (s.zero_based for s in sel.modes)
        return Measurement(self.pixels[np.ix_(rows, cols)].reshape(-1), 0.0, None, sel)

    def __repr__(self):
        return 'ImageInstance({}x{}, k1={}, k2={})'.format(*self.shape, self.k1, self.k2)


def image_to_instance(pixels, k1, k2):
    """
    Decomposes ``pixels`` as ``A S B^T`` and keeps ``U_1 = A_k1 S_k1^1/2``,
    ``U_2 = B_k2 S_k2^1/2`` with an identity-like core, so that
    ``U_1 G U_2^T`` is the rank ``min(k1, k2)`` truncation of the image.

    Ranks above the numerical rank of the image are reduced to it, which
    is logged and recorded in `ImageInstance.requested`.
    """
    x = linalg.as_matrix(pixels, name='image')
    h, w = x.shape
    k1, k2 = int(k1), int(k2)
    limit = min(h, w)
    if not (1 <= k1 <= limit and 1 <= k2 <= limit):
        raise InvalidInputError(
            'Ranks ({}, {}) must lie within [1, {}] for a {}x{} image'
            .format(k1, k2, limit, h, w))

    a, s, bt = scipy.linalg.svd(x, full_matrices=False)
    rank = int(np.count_nonzero(s > max(h, w) * np.finfo(np.float64).eps * s[0])) if s[0] > 0 else 0
    if rank == 0:
        raise InvalidInputError('The image is all zeros and has no factors')

    requested = (k1, k2)
    k1, k2 = min(k1, rank), min(k2, rank)
    if (k1, k2) != requested:
        _log.warning('Image has numerical rank %d, ranks %s reduced to %s',
                     rank, requested, (k1, k2))

    root = np.sqrt(s)
    u1 = a[:, :k1] * root[:k1]
    u2 = bt[:k2].T * root[:k2]
    core = np.eye(k1, k2)
    return ImageInstance(x, k1, k2, u1, u2, core, requested=requested)
