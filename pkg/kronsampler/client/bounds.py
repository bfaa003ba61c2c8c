import typing

from .. import bounds, hints
from ..errors import InvalidInputError
from ..types import ProblemInstance, Selection

if typing.TYPE_CHECKING:
    from .samplingclient import SamplingClient


class BoundMethods:

    # region Public methods

    def reference_optimum(
            self: 'SamplingClient',
            instance: ProblemInstance,
            oracle: str = 'random',
            *,
            seed: 'hints.SeedLike' = None) -> typing.Tuple[Selection, bool]:
        """
        Finds the selection the bounds are checked against.

        Arguments
            instance (`ProblemInstance`):
                The problem to solve.

            oracle (`str`, optional):
                ``exhaustive`` for the exact optimum, ``random`` or
                ``random:COUNT`` for the best of ``COUNT`` random draws
                (the client's ``surrogate_draws`` by default), or ``auto``
                to enumerate when the guard allows it and draw otherwise.

            seed (`int`, optional):
                Seed of the random draws.

        Returns
            The pair ``(selection, surrogate)``, where ``surrogate`` tells
            whether the selection is only a random stand-in.
        """
        sel, surrogate = bounds.reference_optimum(
            instance, oracle, draws=self.surrogate_draws, seed=seed,
            limit=self.enumeration_limit)

        self._log[__name__].debug('Reference optimum from %s oracle (surrogate=%s)',
                                  oracle, surrogate)
        return sel, surrogate

    def check_bound(
            self: 'SamplingClient',
            instance: ProblemInstance,
            kind: str,
            *,
            oracle: str = 'random',
            seed: 'hints.SeedLike' = None,
            selection: Selection = None,
            reference: typing.Tuple[Selection, bool] = None) -> bounds.BoundReport:
        """
        Checks one approximation bound of the FFW selection.

        Arguments
            instance (`ProblemInstance`):
                The problem. ``gamma`` and ``gratio`` need a single mode.

            kind (`str`):
                ``gamma``, ``gratio`` or ``tensor``.

            oracle (`str`, optional):
                How to find the reference optimum, see `reference_optimum`.

            seed (`int`, optional):
                Seed of a random oracle.

            selection (`Selection`, optional):
                Check this selection instead of the FFW one.

            reference (`tuple`, optional):
                A ``(selection, surrogate)`` pair to use as the reference
                instead of calling the oracle.

        Example
            .. code-block:: python

                report = client.check_bound(instance, 'gamma', oracle='exhaustive')
                assert report.satisfied
        """
        if kind not in bounds.KINDS:
            raise InvalidInputError('Unknown bound {!r}, expected one of: {}'.format(
                kind, ', '.join(sorted(bounds.KINDS))))
        if kind != 'tensor' and instance.mode_count != 1:
            raise InvalidInputError(
                'The {} bound applies to a single factor, not {} modes'
                .format(kind, instance.mode_count))

        optimum, surrogate = reference or self.reference_optimum(instance, oracle, seed=seed)
        if kind == 'tensor':
            report = bounds.tensor_check(
                instance, optimum, surrogate=surrogate, selection=selection)
        else:
            check = bounds.check_gamma if kind == 'gamma' else bounds.g_ratio_check
            report = check(instance.factors[0], instance.budget, optimum,
                           surrogate=surrogate, selection=selection)

        if report.sign_condition is False:
            self._log[__name__].warning(
                'The factors of %r violate the sign condition, the %s bound '
                'is not guaranteed', instance, kind)
        return report

    def gamma(
            self: 'SamplingClient',
            factor: 'hints.FactorLike',
            budget: int) -> float:
        """The approximation factor of the vector FP bound."""
        return bounds.gamma_vector(factor, budget)

    # endregion
