"""
Exhaustive oracle: the exact minimizer of the frame potential (or MSE)
over every feasible selection of a small instance.

Both objectives factor over the modes, so for a fixed size vector the best
selection is the best subset of each mode on its own. Each mode and size
is enumerated once, and every size vector then combines the per-mode
optima.
"""
import functools
import itertools
import logging
import operator

import numpy as np
from scipy.special import comb

from ..errors import EnumerationLimitError, InvalidInputError, NumericalError
from ..types import Selection

EXHAUSTIVE = 'exhaustive'

DEFAULT_ENUMERATION_LIMIT = 10 ** 7

# Subsets evaluated together, bounds the memory of the stacked Gram matrices
_CHUNK = 20000

_log = logging.getLogger(__name__)


def size_vectors(instance):
    """Yields every per-mode size vector with ``K_r <= L_r <= N_r`` summing to ``L``."""
    ranges = [range(k, n + 1) for k, n in zip(instance.floors, instance.capacities)]
    for sizes in itertools.product(*ranges):
        if sum(sizes) == instance.budget:
            yield sizes


def enumeration_count(instance):
    """Number of feasible selections, ``sum over sizes of prod_r C(N_r, L_r)``."""
    return sum(
        functools.reduce(operator.mul, (
            comb(n, k, exact=True) for n, k in zip(instance.capacities, sizes)
        ), 1)
        for sizes in size_vectors(instance)
    )


def _subset_values(p, combos, objective):
    rows = p[combos]
    t = np.einsum('cli,clj->cij', rows, rows)
    if objective == 'fp':
        return np.einsum('cij,cij->c', t, t)

    eig = np.linalg.eigvalsh(t)
    top = eig[:, -1]
    tol = t.shape[1] * np.finfo(np.float64).eps * np.maximum(top, 0.0)
    full = np.all(eig > tol[:, None], axis=1) & (top > 0)
    values = np.full(len(combos), np.inf)
    values[full] = np.sum(1.0 / eig[full], axis=1)
    return values


def _best_subset(factor, size, objective):
    """
    Returns ``(value, rows)`` of the best ``size``-subset of ``factor``.

    Combinations come in lexicographic order and `numpy.argmin` keeps the
    first minimum, so ties resolve to the lexicographically smallest rows.
    """
    p = factor.matrix
    best_value, best_rows = np.inf, None
    it = itertools.combinations(range(factor.rows), size)
    while True:
        chunk = list(itertools.islice(it, _CHUNK))
        if not chunk:
            break

        combos = np.array(chunk, dtype=np.intp).reshape(len(chunk), size)
        values = _subset_values(p, combos, objective)
        i = int(np.argmin(values))
        if values[i] < best_value:
            best_value, best_rows = float(values[i]), combos[i]

    if best_rows is None:
        # Every subset is singular, keep the first one as the witness
        best_rows = np.arange(size)
    return best_value, best_rows


def exhaustive_optimum(instance, objective='fp', *, limit=DEFAULT_ENUMERATION_LIMIT):
    """
    The global minimizer of ``objective`` over all feasible selections.

    :param instance: the `ProblemInstance`.
    :param objective: ``'fp'`` for the frame potential product or ``'mse'``
                      for ``tr(T^-1)``, where rank-deficient selections
                      count as infinitely bad and are skipped.
    :param limit: refuse with `EnumerationLimitError` if more selections
                  than this would have to be enumerated.
    :return: a `Selection` whose metadata holds the optimal value.
    """
    if objective not in ('fp', 'mse'):
        raise InvalidInputError('Unknown objective {!r}'.format(objective))

    count = enumeration_count(instance)
    if limit is not None and count > limit:
        raise EnumerationLimitError(count, limit)

    per_mode = [{} for _ in instance.factors]
    best = None
    for sizes in size_vectors(instance):
        parts = []
        for r, (f, k) in enumerate(zip(instance.factors, sizes)):
            if k not in per_mode[r]:
                per_mode[r][k] = _best_subset(f, k, objective)
            parts.append(per_mode[r][k])

        value = functools.reduce(operator.mul, (v for v, _ in parts), 1.0)
        key = (value, tuple(tuple(int(i) for i in rows) for _, rows in parts))
        if best is None or key < best:
            best = key

    value, rows = best
    if not np.isfinite(value):
        raise NumericalError('Every feasible selection is rank deficient')

    _log.debug('Exhaustive %s optimum %.6g over %d selections', objective, value, count)
    return Selection.from_zero_based(
        rows, instance.capacities, EXHAUSTIVE,
        metadata={'objective': objective, 'value': value, 'enumerated': count})
