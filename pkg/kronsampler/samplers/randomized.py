"""
Random sampling, plus the best-of-random reference optimum used when
exhaustive enumeration is too expensive.
"""
import logging

import numpy as np

from .. import framepotential, helpers
from ..errors import InvalidInputError, NumericalError, SingularSelectionError
from ..linalg import IndexSet
from ..types import Selection

RANDOM = 'random'
BEST_OF_RANDOM = 'best-of-random'

DEFAULT_SURROGATE_DRAWS = 10000

# Draws evaluated together by the surrogate, bounds the indicator memory
_CHUNK = 1000

_log = logging.getLogger(__name__)


def allocate_sizes(instance, rng, draws=None):
    """
    Draws per-mode selection sizes.

    Every mode first receives its floor ``K_r``. Each of the remaining
    ``L - sum(K_r)`` slots then goes to a mode chosen uniformly among the
    modes that still have spare rows. The result has shape ``(R,)``, or
    ``(draws, R)`` when ``draws`` is given.
    """
    count = 1 if draws is None else int(draws)
    floors = np.asarray(instance.floors, dtype=np.int64)
    caps = np.asarray(instance.capacities, dtype=np.int64)
    sizes = np.tile(floors, (count, 1))

    for _ in range(instance.budget - instance.min_budget):
        open_modes = sizes < caps
        # Pick the k-th open mode with k uniform in [0, open count)
        k = np.floor(rng.random(count) * open_modes.sum(axis=1)).astype(np.int64)
        rank = np.cumsum(open_modes, axis=1) - 1
        pick = np.argmax(open_modes & (rank == k[:, None]), axis=1)
        sizes[np.arange(count), pick] += 1

    return sizes[0] if draws is None else sizes


def _subset_indicators(rng, n, sizes):
    # Ranking uniform keys gives a uniform permutation per draw, keeping
    # the first sizes[d] positions gives a uniform subset of that size
    ranks = np.argsort(np.argsort(rng.random((len(sizes), n)), axis=1), axis=1)
    return ranks < np.asarray(sizes)[:, None]


def random_selection(instance, seed=None):
    """
    A uniformly random feasible selection.

    Per-mode sizes come from `allocate_sizes`, then each mode keeps a
    uniform subset of that size. The result is reproducible from ``seed``.
    """
    rng = helpers.make_rng(seed)
    sizes = allocate_sizes(instance, rng)
    modes = [
        IndexSet.from_zero_based(rng.choice(n, size=int(k), replace=False), n)
        for n, k in zip(instance.capacities, sizes)
    ]
    return Selection(modes, RANDOM,
                     seed=seed if isinstance(seed, (int, np.integer)) else None)


def _mse_values(instance, indicators):
    values = np.full(indicators[0].shape[0], np.inf)
    for d in range(values.size):
        sel = Selection([IndexSet.from_zero_based(np.flatnonzero(x[d]), x.shape[1])
                         for x in indicators], BEST_OF_RANDOM)
        try:
            values[d] = framepotential.mse_factorized(instance, sel)
        except SingularSelectionError:
            pass
    return values


def best_of_random(instance, draws=DEFAULT_SURROGATE_DRAWS, seed=None,
                   objective='fp'):
    """
    The best of ``draws`` random feasible selections, used as a stand-in
    for the true optimum when enumeration is out of reach.

    :param objective: ``'fp'`` (evaluated in batches) or ``'mse'``.
    :return: a `Selection` tagged ``best-of-random`` whose metadata holds
             the number of draws and the winning objective value.
    """
    if objective not in ('fp', 'mse'):
        raise InvalidInputError('Unknown objective {!r}'.format(objective))
    draws = int(draws)
    if draws < 1:
        raise InvalidInputError('best_of_random needs at least one draw')

    rng = helpers.make_rng(seed)
    best_value = np.inf
    best = None

    done = 0
    while done < draws:
        count = min(_CHUNK, draws - done)
        sizes = allocate_sizes(instance, rng, count)
        indicators = [_subset_indicators(rng, n, sizes[:, r])
                      for r, n in enumerate(instance.capacities)]

        if objective == 'fp':
            values = np.ones(count)
            for f, x in zip(instance.factors, indicators):
                values *= framepotential.batch_frame_potential(f, x)
        else:
            values = _mse_values(instance, indicators)

        d = int(np.argmin(values))
        if values[d] < best_value:
            best_value = float(values[d])
            best = [np.flatnonzero(x[d]) for x in indicators]
        done += count

    if best is None:
        raise NumericalError('None of the {} random draws has full rank'.format(draws))

    _log.debug('Best of %d random draws has %s %.6g', draws, objective, best_value)
    return Selection.from_zero_based(
        best, instance.capacities, BEST_OF_RANDOM,
        seed=seed if isinstance(seed, (int, np.integer)) else None,
        metadata={'draws': draws, 'objective': objective, 'value': best_value})
