import typing

from .. import framepotential, helpers, hints, samplers
from ..extensions import csvio
from ..types import FactorMatrix, ProblemInstance, Selection

if typing.TYPE_CHECKING:
    from .samplingclient import SamplingClient


class SelectionMethods:

    # region Public methods

    def load_instance(
            self: 'SamplingClient',
            factor_paths: 'typing.Sequence[hints.LocalPath]',
            budget: int) -> ProblemInstance:
        """
        Reads one matrix CSV file per mode and builds the instance.

        Arguments
            factor_paths (`list`):
                The factor files, in mode order.

            budget (`int`):
                The total number of rows to select.

        Example
            .. code-block:: python

                instance = client.load_instance(['u1.csv', 'u2.csv'], 60)
        """
        factors = [FactorMatrix(csvio.read_matrix(p), name=str(p)) for p in factor_paths]
        self._log[__name__].info('Loaded %d factors of shapes %s',
                                 len(factors), [f.shape for f in factors])
        return ProblemInstance(factors, budget)

    def scores(
            self: 'SamplingClient',
            factor: 'hints.FactorLike',
            *,
            normalized: bool = False):
        """
        The FFW row scores of a factor, optionally divided by its frame
        potential so that scores of different modes can be pooled.
        """
        if normalized:
            return framepotential.ffw_scores_normalized(factor)
        return framepotential.ffw_scores(factor)

    def select(
            self: 'SamplingClient',
            instance: ProblemInstance,
            algorithm: str = samplers.FFW,
            *,
            seed: 'hints.SeedLike' = None) -> Selection:
        """
        Selects ``instance.budget`` rows with the given algorithm.

        Arguments
            instance (`ProblemInstance`):
                The factors and the budget.

            algorithm (`str`, optional):
                One of ``ffw``, ``framesense`` (single factor only),
                ``greedyfp``, ``random`` or ``exhaustive``.

            seed (`int`, optional):
                Seed of the ``random`` algorithm. Ignored by the others.

        Returns
            The `Selection`, whose ``metadata`` carries the selection time
            in nanoseconds under ``wall_time_ns``.

        Example
            .. code-block:: python

                sel = client.select(instance, 'ffw')
                print(sel.to_json())
        """
        with helpers.Stopwatch() as watch:
            sel = samplers.select(algorithm, instance, seed, limit=self.enumeration_limit)

        sel.metadata['wall_time_ns'] = watch.elapsed_ns
        self._log[__name__].debug('%s selected sizes %s in %d ns',
                                  algorithm, list(sel.sizes), watch.elapsed_ns)
        return sel

    def optimum(
            self: 'SamplingClient',
            instance: ProblemInstance,
            objective: 'hints.Objective' = 'fp') -> Selection:
        """
        The exact optimum of ``objective`` (``fp`` or ``mse``), found by
        enumeration within the client's ``enumeration_limit``.
        """
        return samplers.exhaustive_optimum(instance, objective, limit=self.enumeration_limit)

    # endregion
