"""
Every selection algorithm, plus `select` to run one of them by name.

The names are the ones used on the command line and stored in the
``algorithm`` tag of each `Selection`.
"""
from .ffw import ffw_vector, ffw_tensor, ALGORITHM as FFW
from .greedy import frame_sense, greedy_fp_tensor, FRAME_SENSE, GREEDY_FP, REMOVAL_POLICY
from .randomized import (
    allocate_sizes, random_selection, best_of_random,
    RANDOM, BEST_OF_RANDOM, DEFAULT_SURROGATE_DRAWS
)
from .exhaustive import (
    exhaustive_optimum, enumeration_count, size_vectors,
    EXHAUSTIVE, DEFAULT_ENUMERATION_LIMIT
)
from ..errors import InvalidInputError, UnknownAlgorithmError


def _ffw(instance, seed, limit):
    if instance.mode_count == 1:
        return ffw_vector(instance.factors[0], instance.budget)
    return ffw_tensor(instance)


def _frame_sense(instance, seed, limit):
    if instance.mode_count != 1:
        raise InvalidInputError(
            'framesense works on a single factor, use greedyfp for {} modes'
            .format(instance.mode_count))
    return frame_sense(instance.factors[0], instance.budget)


def _greedy_fp(instance, seed, limit):
    return greedy_fp_tensor(instance)


def _random(instance, seed, limit):
    return random_selection(instance, seed)


def _exhaustive(instance, seed, limit):
    return exhaustive_optimum(instance, 'fp', limit=limit)


ALGORITHMS = {
    FFW: _ffw,
    FRAME_SENSE: _frame_sense,
    GREEDY_FP: _greedy_fp,
    RANDOM: _random,
    EXHAUSTIVE: _exhaustive,
}

# Algorithms whose result depends on the seed
RANDOMIZED = frozenset({RANDOM})


def select(name, instance, seed=None, *, limit=DEFAULT_ENUMERATION_LIMIT):
    """
    Runs the algorithm called ``name`` on ``instance``.

    ``seed`` only matters for randomized algorithms and ``limit`` only for
    the exhaustive search. Raises `UnknownAlgorithmError` for other names.
    """
    try:
        algorithm = ALGORITHMS[name]
    except KeyError:
        raise UnknownAlgorithmError(name, sorted(ALGORITHMS)) from None
    return algorithm(instance, seed, limit)
