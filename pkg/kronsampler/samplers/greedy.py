"""
Greedy "worst-out" baselines minimizing the frame potential: FrameSense for
vectors and its multi-mode extension, Greedy FP, for tensors.

Both start from every row and repeatedly drop the row whose removal leaves
the smallest frame potential. With ``q_ij = <u_i, u_j> ** 2`` and
``c_n = sum_{j in S} q_nj`` removing ``n`` from ``S`` lowers the frame
potential by ``2 c_n - q_nn``, so only ``c`` has to be kept up to date.
"""
import logging

import numpy as np

from .. import framepotential
from ..errors import InfeasibleBudgetError
from ..linalg import IndexSet
from ..types import FactorMatrix, Selection

FRAME_SENSE = 'framesense'
GREEDY_FP = 'greedyfp'

# Removals are interleaved across modes instead of splitting the budget
# per mode up front.
REMOVAL_POLICY = 'interleaved-min-product'

_log = logging.getLogger(__name__)


class _GreedyState:
    """Incremental worst-out state of a single mode."""
    def __init__(self, factor):
        self.factor = factor
        p = factor.matrix
        self.active = np.ones(factor.rows, dtype=bool)
        self.size = factor.rows
        self.coupling = framepotential.ffw_scores(factor).copy()
        norms = np.einsum('nk,nk->n', p, p)
        self.self_coupling = norms * norms
        self.fp = factor.full_fp

    def best_removal(self):
        """Returns ``(row, frame potential after removing it)``."""
        gain = 2 * self.coupling - self.self_coupling
        gain[~self.active] = -np.inf
        # argmax returns the first maximum, which is the lowest index
        n = int(np.argmax(gain))
        return n, max(self.fp - gain[n], 0.0)

    def remove(self, n, fp):
        p = self.factor.matrix
        col = p @ p[n]
        self.coupling -= col * col
        self.active[n] = False
        self.size -= 1
        self.fp = fp

    def selected(self):
        return np.flatnonzero(self.active)


def frame_sense(factor, budget):
    """
    FrameSense: removes ``N - budget`` rows one at a time, each time the
    one whose removal yields the smallest frame potential.
    """
    factor = FactorMatrix.coerce(factor)
    budget = int(budget)
    if not factor.cols <= budget <= factor.rows:
        raise InfeasibleBudgetError(budget, factor.cols, factor.rows)

    state = _GreedyState(factor)
    while state.size > budget:
        n, fp = state.best_removal()
        state.remove(n, fp)

    return Selection(
        [IndexSet.from_zero_based(state.selected(), factor.rows)], FRAME_SENSE)


def greedy_fp_tensor(instance, *, on_removal=None):
    """
    Greedy FP: removes one row at a time from any mode still above its
    floor ``K_r``, choosing the removal that minimizes the product of the
    per-mode frame potentials, until ``instance.budget`` rows remain.

    ``on_removal(mode, row, product_fp)`` is called after every removal,
    with 1-based ``mode`` and ``row``, when given.
    """
    states = [_GreedyState(f) for f in instance.factors]
    remaining = instance.max_budget

    while remaining > instance.budget:
        best = None
        for r, state in enumerate(states):
            if state.size <= state.factor.cols:
                continue

            n, fp = state.best_removal()
            others = 1.0
            for a, other in enumerate(states):
                if a != r:
                    others *= other.fp

            product = fp * others
            # Strict comparison keeps the lowest mode on ties
            if best is None or product < best[0]:
                best = (product, r, n, fp)

        product, r, n, fp = best
        states[r].remove(n, fp)
        remaining -= 1
        if on_removal:
            on_removal(r + 1, n + 1, product)

    _log.debug('Greedy FP kept %s rows per mode', [s.size for s in states])
    return Selection(
        [IndexSet.from_zero_based(s.selected(), s.factor.rows) for s in states],
        GREEDY_FP, metadata={'removal_policy': REMOVAL_POLICY})
