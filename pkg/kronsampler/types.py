"""
Domain types shared by samplers, evaluation and reconstruction.

`FactorMatrix` wraps the tall matrix of one mode together with its cached
Gram matrix, `ProblemInstance` bundles the factors of every mode with the
sensor budget and `Selection` holds the chosen rows of each mode.
"""
import functools
import json
import logging

import numpy as np

from . import linalg
from .errors import (
    InvalidInputError, DimensionMismatchError, InfeasibleBudgetError
)
from .linalg import IndexSet

_log = logging.getLogger(__name__)


class FactorMatrix:
    """
    The ``N_r x K_r`` matrix relating one mode of the signal to the core.

    The Gram matrix and the full frame potential are computed lazily and
    cached, since every sampler needs them and they never change.
    """
    def __init__(self, matrix, *, name=None):
        self._matrix = linalg.as_matrix(matrix, name=name or 'factor')
        self.name = name

    @classmethod
    def coerce(cls, value):
        """Returns ``value`` itself if it already is a factor, else wraps it."""
        if isinstance(value, cls):
            return value
        return cls(value)

    @property
    def matrix(self):
        return self._matrix

    @property
    def rows(self):
        return self._matrix.shape[0]

    @property
    def cols(self):
        return self._matrix.shape[1]

    @property
    def shape(self):
        return self._matrix.shape

    @functools.cached_property
    def gram(self):
        g = linalg.gram(self._matrix)
        g.flags.writeable = False
        return g

    @functools.cached_property
    def full_fp(self):
        """Frame potential of the whole factor, ``sum_ij m_ij ** 2``."""
        return float(np.sum(self.gram * self.gram))

    def restrict(self, sel):
        return linalg.restrict_rows(self._matrix, sel)

    def __repr__(self):
        return 'FactorMatrix({}x{}{})'.format(
            self.rows, self.cols,
            '' if self.name is None else ', name={!r}'.format(self.name))


class ProblemInstance:
    """
    The ordered factors of every mode plus the total sensor budget ``L``.

    The budget must satisfy ``sum(K_r) <= L <= sum(N_r)`` so that a
    selection with ``|L_r| >= K_r`` in every mode exists.
    """
    def __init__(self, factors, budget):
        self.factors = tuple(FactorMatrix.coerce(f) for f in factors)
        if not self.factors:
            raise InvalidInputError('A problem instance needs at least one mode')

        for r, f in enumerate(self.factors, start=1):
            if f.rows < f.cols:
                raise DimensionMismatchError(
                    'factor of mode {}'.format(r), 'rows >= cols', f.shape)
            if f.rows == f.cols:
                _log.warning('Factor of mode %d is square (%dx%d), '
                             'the model assumes tall factors', r, *f.shape)

        self.budget = int(budget)
        if not self.min_budget <= self.budget <= self.max_budget:
            raise InfeasibleBudgetError(
                self.budget, self.min_budget, self.max_budget)

    @classmethod
    def single(cls, factor, budget):
        """A vector (single-mode) instance."""
        return cls([factor], budget)

    def with_budget(self, budget):
        return ProblemInstance(self.factors, budget)

    @property
    def mode_count(self):
        return len(self.factors)

    @property
    def shapes(self):
        return tuple(f.shape for f in self.factors)

    @property
    def floors(self):
        return tuple(f.cols for f in self.factors)

    @property
    def capacities(self):
        return tuple(f.rows for f in self.factors)

    @property
    def min_budget(self):
        return sum(self.floors)

    @property
    def max_budget(self):
        return sum(self.capacities)

    def check_selection(self, sel, *, floors=True):
        """
        Raises `InvalidInputError` if ``sel`` does not fit this instance.

        With ``floors`` the per-mode minimum sizes and the total budget
        are enforced too, otherwise only the mode layout is checked.
        """
        if len(sel.modes) != self.mode_count:
            raise DimensionMismatchError(
                'selection modes', self.mode_count, len(sel.modes))

        for r, (s, f) in enumerate(zip(sel.modes, self.factors), start=1):
            if s.universe != f.rows:
                raise DimensionMismatchError(
                    'selection universe of mode {}'.format(r), f.rows, s.universe)
            if floors and len(s) < f.cols:
                raise InvalidInputError(
                    'Mode {} selects {} rows but needs at least {}'
                    .format(r, len(s), f.cols))

        if floors and sel.budget != self.budget:
            raise InfeasibleBudgetError(sel.budget, self.budget, self.budget)

    def __repr__(self):
        return 'ProblemInstance(shapes={}, budget={})'.format(
            list(self.shapes), self.budget)


class Selection:
    """
    Per-mode sets of selected rows, tagged with the algorithm (and seed,
    for randomized algorithms) that produced them.

    ``metadata`` carries free-form notes that travel with the selection,
    such as the removal policy used by Greedy FP.
    """
    def __init__(self, modes, algorithm, *, seed=None, metadata=None):
        self.modes = tuple(modes)
        for s in self.modes:
            if not isinstance(s, IndexSet):
                raise TypeError('Selection modes must be IndexSet, not {!r}'
                                .format(type(s)))

        self.algorithm = str(algorithm)
        self.seed = None if seed is None else int(seed)
        self.metadata = dict(metadata or {})

    @classmethod
    def from_zero_based(cls, modes, universes, algorithm, **kwargs):
        return cls([IndexSet.from_zero_based(m, n)
                    for m, n in zip(modes, universes)], algorithm, **kwargs)

    @property
    def budget(self):
        return sum(len(s) for s in self.modes)

    @property
    def sizes(self):
        return tuple(len(s) for s in self.modes)

    @property
    def grid_size(self):
        """Number of measured entries, the product of the per-mode sizes."""
        return int(np.prod(self.sizes, dtype=np.int64))

    def complement(self):
        return [s.complement() for s in self.modes]

    def indicators(self):
        return [s.indicator() for s in self.modes]

    def same_rows(self, other):
        """Whether both selections pick exactly the same rows."""
        return self.modes == other.modes

    def to_dict(self):
        d = {
            'algorithm': self.algorithm,
            'seed': self.seed,
            'budget': self.budget,
            'modes': [{'n': s.universe, 'indices': list(s.indices)}
                      for s in self.modes]
        }
        if self.metadata:
            d['metadata'] = self.metadata
        return d

    @classmethod
    def from_dict(cls, d):
        try:
            modes = [IndexSet(m['indices'], m['n']) for m in d['modes']]
            sel = cls(modes, d['algorithm'], seed=d.get('seed'),
                      metadata=d.get('metadata'))
        except (KeyError, TypeError) as e:
            raise InvalidInputError(
                'Malformed selection document: {}'.format(e)) from None

        if 'budget' in d and int(d['budget']) != sel.budget:
            raise InvalidInputError(
                'Selection document says budget {} but lists {} indices'
                .format(d['budget'], sel.budget))
        return sel

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text):
        try:
            d = json.loads(text)
        except ValueError as e:
            raise InvalidInputError('Selection is not valid JSON: {}'.format(e))
        return cls.from_dict(d)

    def __eq__(self, other):
        if not isinstance(other, Selection):
            return NotImplemented
        return (self.modes == other.modes
                and self.algorithm == other.algorithm
                and self.seed == other.seed)

    def __hash__(self):
        return hash((self.modes, self.algorithm, self.seed))

    def __repr__(self):
        return 'Selection({}, sizes={}{})'.format(
            self.algorithm, list(self.sizes),
            '' if self.seed is None else ', seed={}'.format(self.seed))
