"""
Benchmark suites: which ensembles, budgets, algorithms and bounds a
benchmark sweeps over.

A `BenchSuite` is a list of `BenchPlan`. Each plan is one ensemble swept
over a budget grid, and every trial of a plan is one unit of work.
"""
from . import samplers
from .errors import InvalidInputError
from .instances import EnsembleSpec, GAUSSIAN, SIGN_CONDITION

VECTOR_SHAPE = (200, 40)
TENSOR_SHAPES = ((50, 10), (60, 20), (70, 15))
RUNTIME_VECTOR_SIZES = range(100, 401, 50)
RUNTIME_VECTOR_COLS = 40
RUNTIME_TENSOR_OFFSETS = range(0, 61, 10)
RUNTIME_TENSOR_COLS = (10, 20, 15)


def budget_grid(low, high, step):
    """``low, low + step, ...`` up to and including ``high``."""
    if step < 1 or low > high:
        raise InvalidInputError('Bad budget grid {}..{} step {}'.format(low, high, step))
    return list(range(low, high + 1, step))


class BenchPlan:
    """
    One ensemble swept over ``budgets`` with every algorithm in
    ``algorithms``. When ``bound`` is set, every cell also checks that
    bound against a reference found with ``oracle``.
    """
    def __init__(self, spec, budgets, algorithms, *, bound=None, oracle='random'):
        self.spec = spec
        self.budgets = [int(b) for b in budgets]
        self.algorithms = list(algorithms)
        self.bound = bound
        self.oracle = oracle

        for name in self.algorithms:
            if name not in samplers.ALGORITHMS:
                raise InvalidInputError('Unknown algorithm {!r} in benchmark'.format(name))
        if not self.budgets:
            raise InvalidInputError('A benchmark plan needs at least one budget')

        low = sum(k for _, k in spec.mode_shapes)
        high = sum(n for n, _ in spec.mode_shapes)
        for b in self.budgets:
            if not low <= b <= high:
                raise InvalidInputError('Budget {} is infeasible for shapes {}, it must '
                                        'lie within [{}, {}]'.format(b, list(spec.mode_shapes), low, high))

    def to_dict(self):
        return {
            'ensemble': self.spec.to_dict(),
            'budgets': self.budgets,
            'algorithms': self.algorithms,
            'bound': self.bound,
            'oracle': self.oracle if self.bound else None,
        }


class BenchSuite:
    def __init__(self, name, plans):
        self.name = name
        self.plans = list(plans)

    @property
    def trial_count(self):
        return sum(p.spec.trials for p in self.plans)

    def to_dict(self):
        return {'suite': self.name, 'plans': [p.to_dict() for p in self.plans]}

    def __repr__(self):
        return 'BenchSuite({}, {} plans, {} trials)'.format(
            self.name, len(self.plans), self.trial_count)


def _half(shapes):
    # Half of all rows, but never below the floors
    return max(sum(n for n, _ in shapes) // 2, sum(k for _, k in shapes))


def vector_suite(kind=SIGN_CONDITION, trials=100, seed=0, *, step=5, unit_rows=True):
    """200x40 factors with unit-norm rows and budgets 45, 50, ..., 200."""
    n, k = VECTOR_SHAPE
    spec = EnsembleSpec(kind, [VECTOR_SHAPE], seed, trials, unit_rows=unit_rows)
    return BenchSuite('vector', [BenchPlan(
        spec, budget_grid(k + 5, n, step),
        [samplers.FFW, samplers.FRAME_SENSE, samplers.RANDOM])])


def tensor_suite(kind=SIGN_CONDITION, trials=100, seed=0, *, step=15):
    """Three modes of shapes 50x10, 60x20 and 70x15, budgets from 45 up."""
    spec = EnsembleSpec(kind, TENSOR_SHAPES, seed, trials)
    low = sum(k for _, k in TENSOR_SHAPES)
    high = sum(n for n, _ in TENSOR_SHAPES)
    return BenchSuite('tensor', [BenchPlan(
        spec, budget_grid(low, high, step),
        [samplers.FFW, samplers.GREEDY_FP, samplers.RANDOM])])


def runtime_vector_suite(kind=GAUSSIAN, trials=10, seed=0):
    """``N`` from 100 to 400 with ``K = 40`` and ``L = N / 2``."""
    plans = []
    for n in RUNTIME_VECTOR_SIZES:
        shapes = [(n, RUNTIME_VECTOR_COLS)]
        plans.append(BenchPlan(
            EnsembleSpec(kind, shapes, seed, trials), [_half(shapes)],
            [samplers.FFW, samplers.FRAME_SENSE]))
    return BenchSuite('runtime-vector', plans)


def runtime_tensor_suite(kind=GAUSSIAN, trials=10, seed=0):
    """Modes ``(30 + w, 40 + w, 50 + w)`` with ``w`` from 0 to 60 and half the rows."""
    plans = []
    for w in RUNTIME_TENSOR_OFFSETS:
        shapes = [(base + w, k) for base, k in zip((30, 40, 50), RUNTIME_TENSOR_COLS)]
        plans.append(BenchPlan(
            EnsembleSpec(kind, shapes, seed, trials), [_half(shapes)],
            [samplers.FFW, samplers.GREEDY_FP]))
    return BenchSuite('runtime-tensor', plans)


def bounds_suite(kind=SIGN_CONDITION, trials=10, seed=0, *, oracle='random'):
    """FFW against the gamma bound (vector) and the exponential bound (tensor)."""
    n, k = VECTOR_SHAPE
    vector = BenchPlan(
        EnsembleSpec(kind, [VECTOR_SHAPE], seed, trials),
        budget_grid(k + 10, n, 30), [samplers.FFW], bound='gamma', oracle=oracle)
    low = sum(k for _, k in TENSOR_SHAPES)
    high = sum(n for n, _ in TENSOR_SHAPES)
    tensor = BenchPlan(
        EnsembleSpec(kind, TENSOR_SHAPES, seed, trials),
        budget_grid(low, high, 45), [samplers.FFW], bound='tensor', oracle=oracle)
    return BenchSuite('bounds', [vector, tensor])


def custom_suite(shapes, budgets, algorithms, kind=SIGN_CONDITION, trials=1, seed=0,
                 *, bound=None, oracle='random'):
    """Any shapes, budgets and algorithms."""
    return BenchSuite('custom', [BenchPlan(
        EnsembleSpec(kind, shapes, seed, trials), budgets, algorithms,
        bound=bound, oracle=oracle)])


SUITES = {
    'vector': vector_suite,
    'tensor': tensor_suite,
    'runtime-vector': runtime_vector_suite,
    'runtime-tensor': runtime_tensor_suite,
    'bounds': bounds_suite,
}
