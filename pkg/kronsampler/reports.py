"""
Report rows produced when evaluating selections, one per (instance,
algorithm, budget) cell, and their CSV and JSON forms.
"""
from .helpers import format_float

CSV_HEADER = ('trial', 'algo', 'shapes', 'budget', 'fp', 'mse', 'bound_kind',
              'bound', 'achieved', 'surrogate', 'wall_time_ns', 'seed')


def format_shapes(shapes):
    """``[(50, 10), (60, 20)]`` becomes ``50x10;60x20``."""
    return ';'.join('{}x{}'.format(n, k) for n, k in shapes)


def parse_shapes(text):
    return [tuple(int(x) for x in s.split('x')) for s in text.split(';')]


def _opt(value, digits=17):
    return '' if value is None else format_float(value, digits)


class EvalReport:
    """
    Quality and cost of one selection.

    ``fp`` and ``mse`` are `None` when not requested or when they could
    not be computed, in which case ``errors`` maps the metric to the
    message of the error that prevented it. ``bound`` holds the
    `BoundReport` when a certificate was checked.
    """
    def __init__(self, shapes, algorithm, budget, *, seed=None, fp=None, mse=None,
                 bound=None, wall_time_ns=None, selection=None, errors=None):
        self.shapes = tuple(tuple(s) for s in shapes)
        self.algorithm = algorithm
        self.budget = int(budget)
        self.seed = seed
        self.fp = fp
        self.mse = mse
        self.bound = bound
        self.wall_time_ns = wall_time_ns
        self.selection = selection
        self.errors = dict(errors or {})

    @property
    def ok(self):
        return not self.errors

    def to_dict(self):
        d = {
            'algorithm': self.algorithm,
            'shapes': [list(s) for s in self.shapes],
            'budget': self.budget,
            'seed': self.seed,
            'fp': self.fp,
            'mse': self.mse,
            'wall_time_ns': self.wall_time_ns,
            'bound': None if self.bound is None else self.bound.to_dict(),
        }
        if self.selection is not None:
            d['sizes'] = list(self.selection.sizes)
        if self.errors:
            d['errors'] = self.errors
        return d

    def csv_row(self, trial=''):
        """The report in the column order of `CSV_HEADER`."""
        b = self.bound
        return (
            str(trial),
            self.algorithm,
            format_shapes(self.shapes),
            str(self.budget),
            _opt(self.fp),
            _opt(self.mse),
            '' if b is None else b.kind,
            '' if b is None else format_float(b.bound_value),
            '' if b is None else format_float(b.achieved_value),
            '' if b is None else str(b.surrogate).lower(),
            '' if self.wall_time_ns is None else str(self.wall_time_ns),
            '' if self.seed is None else str(self.seed),
        )

    def __repr__(self):
        return 'EvalReport({}, budget={}, fp={}, mse={})'.format(
            self.algorithm, self.budget, _opt(self.fp, 6), _opt(self.mse, 6))


class BenchRow(EvalReport):
    """An `EvalReport` that belongs to trial ``trial`` of a benchmark."""
    def __init__(self, trial, report):
        super().__init__(
            report.shapes, report.algorithm, report.budget, seed=report.seed,
            fp=report.fp, mse=report.mse, bound=report.bound,
            wall_time_ns=report.wall_time_ns, selection=report.selection,
            errors=report.errors)
        self.trial = int(trial)

    def csv_row(self, trial=None):
        return super().csv_row(self.trial if trial is None else trial)

    def to_dict(self):
        d = super().to_dict()
        d['trial'] = self.trial
        return d
