"""
Approximation certificates for the FFW selections.

Three checks are available. The G ratio and the gamma factor apply to
single factors. The exponential factor applies to Kronecker instances.
Each check compares the FFW selection against a reference optimum, which
is either exact (from the exhaustive search) or the best of many random
draws, in which case the report is marked as a surrogate.
"""
import logging
import math

import numpy as np

from . import framepotential, linalg
from .errors import (
    InvalidInputError, DimensionMismatchError, DegenerateInputError,
    EnumerationLimitError
)
from .helpers import format_float
from .linalg import IndexSet
from .samplers import (
    ffw_vector, ffw_tensor, exhaustive_optimum, best_of_random,
    DEFAULT_ENUMERATION_LIMIT, DEFAULT_SURROGATE_DRAWS
)
from .types import FactorMatrix, ProblemInstance, Selection

G_RATIO = 'vector-G-ratio'
GAMMA = 'vector-gamma'
TENSOR = 'tensor-exponential'

KINDS = {
    'gratio': G_RATIO,
    'gamma': GAMMA,
    'tensor': TENSOR,
}

# Relative slack when comparing the two sides of a bound
RELATIVE_SLACK = 1e-9

CSV_HEADER = ('kind', 'M_or_gamma', 'bound', 'achieved', 'reference',
              'surrogate', 'satisfied')

_log = logging.getLogger(__name__)


class BoundReport:
    """
    The outcome of checking one bound.

    Members:
        kind (`str`):
            One of ``vector-G-ratio``, ``vector-gamma`` or
            ``tensor-exponential``.

        parameter (`float`):
            The gamma factor, the exponent ``M`` of the tensor bound, or
            ``N / (N + L)`` for the G ratio.

        bound_value (`float`):
            The right-hand side that ``achieved_value`` must not exceed.

        achieved_value (`float`):
            The left-hand side.

        reference_value (`float`):
            The objective of the reference optimum.

        surrogate (`bool`):
            Whether the reference is the best of random draws rather than
            the exact optimum.

        satisfied (`bool`):
            ``achieved_value <= bound_value`` up to a relative slack.

        diagnostic (`bool`):
            Whether a violation is informative only. The tensor bound
            drops higher order terms, so it is always diagnostic.

        sign_condition (`bool`):
            Whether every factor meets the hypotheses of the bound: rows
            of a single sign and non-orthogonal columns.
    """
    def __init__(self, kind, parameter, bound_value, achieved_value,
                 reference_value, *, surrogate=False, diagnostic=False,
                 sign_condition=None):
        self.kind = kind
        self.parameter = float(parameter)
        self.bound_value = float(bound_value)
        self.achieved_value = float(achieved_value)
        self.reference_value = float(reference_value)
        self.surrogate = bool(surrogate)
        self.diagnostic = bool(diagnostic)
        self.sign_condition = sign_condition
        self.satisfied = within_bound(self.achieved_value, self.bound_value)

    def to_dict(self):
        return {
            'kind': self.kind,
            'parameter': self.parameter,
            'bound': self.bound_value,
            'achieved': self.achieved_value,
            'reference': self.reference_value,
            'surrogate': self.surrogate,
            'satisfied': self.satisfied,
            'diagnostic': self.diagnostic,
            'sign_condition': self.sign_condition,
        }

    def csv_row(self):
        """The report as strings in the order of `CSV_HEADER`."""
        return (
            self.kind,
            format_float(self.parameter),
            format_float(self.bound_value),
            format_float(self.achieved_value),
            format_float(self.reference_value),
            str(self.surrogate).lower(),
            str(self.satisfied).lower(),
        )

    def __repr__(self):
        return 'BoundReport({}, achieved={:.6g}, bound={:.6g}, satisfied={})'.format(
            self.kind, self.achieved_value, self.bound_value, self.satisfied)


def within_bound(achieved, bound):
    return achieved <= bound + RELATIVE_SLACK * max(abs(bound), abs(achieved))


def _vector_selection(factor, sel):
    if isinstance(sel, Selection):
        if len(sel.modes) != 1:
            raise DimensionMismatchError('selection modes', 1, len(sel.modes))
        sel = sel.modes[0]
    if not isinstance(sel, IndexSet):
        sel = IndexSet(sel, factor.rows)
    if sel.universe != factor.rows:
        raise DimensionMismatchError('selection universe', factor.rows, sel.universe)
    return sel


def sign_condition(factor):
    """
    Whether ``factor`` satisfies the hypotheses of the approximation
    guarantees: every row has entries of one sign and the columns are not
    mutually orthogonal.
    """
    return (framepotential.has_sign_condition(factor)
            and framepotential.is_non_orthogonal(factor))


def gamma_vector(factor, budget):
    """
    The approximation factor ``gamma`` of the vector FP bound,
    ``(F(N) * K * L / L_min ** 2 + N) / (N + L)``.

    ``L_min`` is the sum of the ``L`` smallest squared row norms.
    Raises `DegenerateInputError` when that sum is zero.
    """
    factor = FactorMatrix.coerce(factor)
    n, k = factor.shape
    budget = int(budget)
    if not k <= budget <= n:
        raise InvalidInputError(
            'gamma needs {} <= budget <= {}, got {}'.format(k, n, budget))

    p = factor.matrix
    norms = np.sort(np.einsum('nk,nk->n', p, p))
    l_min = float(np.sum(norms[:budget]))
    if l_min <= 0:
        raise DegenerateInputError(
            'the {} smallest rows are all zero, L_min vanishes'.format(budget))

    return (factor.full_fp * k * budget / l_min ** 2 + n) / (n + budget)


def g_value(factor, sel):
    """
    ``G(S) = F(N) - F(N minus S)`` where ``S`` is the set of rows left out
    by ``sel``, so ``N minus S`` is the selection itself.
    """
    factor = FactorMatrix.coerce(factor)
    sel = _vector_selection(factor, sel)
    return factor.full_fp - framepotential.frame_potential(factor, sel)


def check_gamma(factor, budget, optimum, *, surrogate=False, selection=None):
    """
    Checks ``FP(L') <= gamma * FP(L*)`` for the FFW selection ``L'``, or for
    ``selection`` when given. ``optimum`` is the reference ``L*``, and
    ``surrogate`` says it is a best-of-random stand-in.
    """
    factor = FactorMatrix.coerce(factor)
    gamma = gamma_vector(factor, budget)
    chosen = selection if selection is not None else ffw_vector(factor, budget)

    achieved = framepotential.frame_potential(factor, _vector_selection(factor, chosen))
    reference = framepotential.frame_potential(factor, _vector_selection(factor, optimum))
    return BoundReport(
        GAMMA, gamma, gamma * reference, achieved, reference,
        surrogate=surrogate, sign_condition=sign_condition(factor))


def g_ratio_check(factor, budget, optimum, *, surrogate=False, selection=None):
    """
    Checks ``G(S') > N / (N + L) * G(S*)``.

    The report stores ``N / (N + L) * G(S*)`` as the achieved value and
    ``G(S')`` as the bound, so that ``satisfied`` keeps meaning
    ``achieved <= bound``. The guarantee itself is a strict inequality.
    """
    factor = FactorMatrix.coerce(factor)
    budget = int(budget)
    chosen = selection if selection is not None else ffw_vector(factor, budget)

    ratio = factor.rows / (factor.rows + budget)
    g_chosen = g_value(factor, chosen)
    g_best = g_value(factor, optimum)
    return BoundReport(
        G_RATIO, ratio, g_chosen, ratio * g_best, g_best,
        surrogate=surrogate, sign_condition=sign_condition(factor))


def tensor_bound_exponent(instance, sel):
    """
    The exponent ``M`` of the tensor bound and the factor
    ``exp(M - M ** 2 / (2 R))``.

    ``M = 2 sum_r sum_ij m_ij sum_{t in S'_r} p_ti p_tj / F_r(N)`` where
    ``S'_r`` are the rows of mode ``r`` left out by ``sel``. Higher order
    terms of the bound are ignored. Under the sign condition ``M`` lies
    within ``[0, 2 R]``, anything else is logged as a violation.

    :return: the pair ``(M, factor)``.
    """
    if len(sel.modes) != instance.mode_count:
        raise DimensionMismatchError('selection modes', instance.mode_count, len(sel.modes))

    m = 0.0
    for r, (f, s) in enumerate(zip(instance.factors, sel.modes), start=1):
        if f.full_fp <= 0:
            raise DegenerateInputError('factor of mode {} is the zero matrix'.format(r))
        left_out = linalg.gram(f.restrict(s.complement()))
        m += float(np.sum(f.gram * left_out)) / f.full_fp
    m *= 2

    modes = instance.mode_count
    if not -RELATIVE_SLACK <= m <= 2 * modes * (1 + RELATIVE_SLACK):
        _log.warning('Tensor bound exponent M=%.6g is outside [0, %d], '
                     'the sign condition does not hold', m, 2 * modes)

    return m, math.exp(m - m * m / (2 * modes))


def tensor_check(instance, optimum, *, surrogate=False, selection=None):
    """
    Checks ``FP(L') <= exp(M - M ** 2 / (2 R)) * FP(L*)`` for the FFW
    tensor selection ``L'``. The result is always diagnostic.
    """
    chosen = selection if selection is not None else ffw_tensor(instance)
    m, factor = tensor_bound_exponent(instance, chosen)

    achieved = framepotential.frame_potential_product(instance, chosen)
    reference = framepotential.frame_potential_product(instance, optimum)
    report = BoundReport(
        TENSOR, m, factor * reference, achieved, reference,
        surrogate=surrogate, diagnostic=True,
        sign_condition=all(sign_condition(f) for f in instance.factors))

    if not report.satisfied:
        _log.info('Tensor bound not met: FP %.6g > %.6g (M=%.6g)',
                  achieved, report.bound_value, m)
    return report


def parse_oracle(text):
    """
    Parses an oracle description: ``exhaustive``, ``auto``, ``random`` or
    ``random:COUNT``. Returns ``(name, draws)``, where ``draws`` is `None`
    unless a count was given.
    """
    name, _, count = str(text).partition(':')
    name = name.strip().lower()
    if name not in ('exhaustive', 'auto', 'random'):
        raise InvalidInputError('Unknown oracle {!r}'.format(text))
    if not count:
        return name, None
    if name != 'random':
        raise InvalidInputError('Only the random oracle takes a count, not {!r}'.format(text))

    try:
        draws = int(count)
    except ValueError:
        raise InvalidInputError('Bad draw count in oracle {!r}'.format(text)) from None
    if draws < 1:
        raise InvalidInputError('The random oracle needs at least one draw')
    return name, draws


def reference_optimum(instance, oracle='random', *, draws=DEFAULT_SURROGATE_DRAWS,
                      seed=None, limit=DEFAULT_ENUMERATION_LIMIT):
    """
    Finds the reference optimum of ``instance`` under the FP objective.

    ``oracle`` is ``exhaustive`` (which fails if the enumeration guard is
    exceeded), ``random`` for the best of ``draws`` random selections, or
    ``auto`` which tries the exhaustive search and falls back to random
    draws when the guard is exceeded.

    :return: the pair ``(Selection, surrogate)``.
    """
    if not isinstance(instance, ProblemInstance):
        raise TypeError('instance must be a ProblemInstance, not {!r}'.format(type(instance)))

    name, count = parse_oracle(oracle)
    if count is not None:
        draws = count

    if name in ('exhaustive', 'auto'):
        try:
            return exhaustive_optimum(instance, 'fp', limit=limit), False
        except EnumerationLimitError as e:
            if name == 'exhaustive':
                raise
            _log.info('%s, falling back to %d random draws', e, draws)

    return best_of_random(instance, draws, seed, 'fp'), True
