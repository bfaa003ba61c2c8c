"""
Fast Frank-Wolfe sampling: rank the rows by the gradient of the closed-form
extension at a uniform interior point and keep the lowest-scored ones.

The gradient at ``eps * 1`` is ``2 * eps`` times the score of each row, a
positive factor that cannot change the ranking, so scores are used as is.
"""
import heapq
import itertools
import logging

import numpy as np

from .. import framepotential
from ..errors import InfeasibleBudgetError
from ..linalg import IndexSet
from ..types import FactorMatrix, Selection

ALGORITHM = 'ffw'

_log = logging.getLogger(__name__)


def _ranking(scores):
    # Stable sort, so equal scores keep the lowest index first
    return np.argsort(scores, kind='stable')


def ffw_vector(factor, budget):
    """
    Selects the ``budget`` rows of ``factor`` with the smallest scores,
    ``K <= budget <= N``.
    """
    factor = FactorMatrix.coerce(factor)
    budget = int(budget)
    if not factor.cols <= budget <= factor.rows:
        raise InfeasibleBudgetError(budget, factor.cols, factor.rows)

    order = _ranking(framepotential.ffw_scores(factor))
    return Selection(
        [IndexSet.from_zero_based(order[:budget], factor.rows)], ALGORITHM)


def ffw_tensor(instance):
    """
    Selects ``instance.budget`` rows pooled across every mode.

    Each mode first gets its ``K_r`` lowest-scored rows so that the floors
    hold. The remaining slots go to the smallest normalized scores among
    the rows that are left, in ascending order, which never exceeds the
    capacity ``N_r`` of a mode. Equal scores favour the lower mode and
    then the lower row.
    """
    chosen = []
    leftovers = []
    for r, f in enumerate(instance.factors):
        raw = framepotential.ffw_scores(f)
        norm = framepotential.ffw_scores_normalized(f)
        order = _ranking(raw)
        chosen.append(list(order[:f.cols]))
        # Ordered by the raw score, which the normalization keeps monotone
        leftovers.append([(norm[i], r, int(i)) for i in order[f.cols:]])

    extra = instance.budget - instance.min_budget
    for _, r, i in itertools.islice(heapq.merge(*leftovers), extra):
        chosen[r].append(i)

    _log.debug('FFW allocated %s rows to modes of sizes %s',
               [len(c) for c in chosen], list(instance.capacities))

    return Selection.from_zero_based(chosen, instance.capacities, ALGORITHM)

