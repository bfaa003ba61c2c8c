import typing

from .. import framepotential, hints
from ..errors import KronSamplerError, InvalidInputError
from ..reports import EvalReport
from ..types import ProblemInstance, Selection

if typing.TYPE_CHECKING:
    from .samplingclient import SamplingClient

METRICS = ('fp', 'mse', 'both')


class EvaluationMethods:

    # region Public methods

    def frame_potential(
            self: 'SamplingClient',
            instance: ProblemInstance,
            sel: Selection) -> float:
        """The frame potential of ``sel``, the product over its modes."""
        return framepotential.frame_potential_product(instance, sel)

    def mse(
            self: 'SamplingClient',
            instance: ProblemInstance,
            sel: Selection) -> float:
        """
        ``tr(T^-1)`` of ``sel``. Raises `SingularSelectionError` for rank
        deficient selections and `MseSizeError` above ``mse_max_products``.
        """
        return framepotential.mse(instance, sel, max_products=self.mse_max_products)

    def evaluate_selection(
            self: 'SamplingClient',
            instance: ProblemInstance,
            sel: Selection,
            *,
            metric: str = 'both',
            wall_time_ns: int = None) -> EvalReport:
        """
        Computes the requested metrics of an existing selection.

        Failures to compute a metric do not raise. They leave the metric
        as `None` and are recorded in `EvalReport.errors`, so that one bad
        cell does not stop a whole benchmark.

        Arguments
            metric (`str`, optional):
                ``fp``, ``mse`` or ``both``.

            wall_time_ns (`int`, optional):
                Selection time to store in the report.
        """
        if metric not in METRICS:
            raise InvalidInputError('Unknown metric {!r}, expected one of: {}'.format(
                metric, ', '.join(METRICS)))
        instance.check_selection(sel, floors=False)

        report = EvalReport(instance.shapes, sel.algorithm, sel.budget, seed=sel.seed,
                            wall_time_ns=wall_time_ns, selection=sel)
        if metric in ('fp', 'both'):
            report.fp = self.frame_potential(instance, sel)
        if metric in ('mse', 'both'):
            try:
                report.mse = self.mse(instance, sel)
            except KronSamplerError as e:
                self._log[__name__].info('No MSE for %r: %s', sel, e)
                report.errors['mse'] = str(e)
        return report

    def evaluate(
            self: 'SamplingClient',
            instance: ProblemInstance,
            algorithm: str,
            *,
            seed: 'hints.SeedLike' = None,
            metric: str = 'both',
            bound: str = None,
            oracle: str = 'random',
            reference: typing.Tuple[Selection, bool] = None) -> EvalReport:
        """
        Runs ``algorithm`` on ``instance`` and reports how good and how
        fast the selection is.

        Arguments
            instance (`ProblemInstance`):
                The factors and the budget.

            algorithm (`str`):
                The sampler name, as in `select`.

            seed (`int`, optional):
                Seed for randomized samplers.

            metric (`str`, optional):
                ``fp``, ``mse`` or ``both``.

            bound (`str`, optional):
                Also check this bound (``gamma``, ``gratio`` or
                ``tensor``) with the selection on the left-hand side.

            oracle (`str`, optional):
                Reference oracle for the bound, see `reference_optimum`.

            reference (`tuple`, optional):
                A precomputed ``(selection, surrogate)`` reference.

        Returns
            An `EvalReport` carrying the metrics, the bound and the time
            the selection alone took.

        Example
            .. code-block:: python

                report = client.evaluate(instance, 'ffw', bound='gamma')
                print(report.fp, report.mse, report.bound.satisfied)
        """
        sel = self.select(instance, algorithm, seed=seed)
        report = self.evaluate_selection(
            instance, sel, metric=metric, wall_time_ns=sel.metadata['wall_time_ns'])

        if bound:
            try:
                report.bound = self.check_bound(
                    instance, bound, oracle=oracle, seed=seed, selection=sel,
                    reference=reference)
            except KronSamplerError as e:
                self._log[__name__].warning('Bound %s failed for %s: %s', bound, algorithm, e)
                report.errors['bound'] = str(e)
        return report

    # endregion
