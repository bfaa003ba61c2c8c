import abc
import logging
import typing

from .. import version, helpers, __name__ as __base_name__
from ..errors import InvalidInputError
from ..framepotential import DEFAULT_MSE_MAX_PRODUCTS
from ..linalg import DEFAULT_KRON_MAX_ENTRIES
from ..samplers import DEFAULT_ENUMERATION_LIMIT, DEFAULT_SURROGATE_DRAWS

if typing.TYPE_CHECKING:
    from .samplingclient import SamplingClient

_base_log = logging.getLogger(__base_name__)


class SamplingBaseClient(abc.ABC):
    """
    This is the abstract base class for the client. It holds the resource
    guards and the logging setup every method shares, while the methods
    themselves live in the mixins that make up `SamplingClient`.

    Arguments
        kron_max_entries (`int`, optional):
            Largest explicit Kronecker product, in entries, the client will
            ever form. Products above this raise `KronSizeError`.
            Defaults to ``10 ** 8``.

        mse_max_products (`int`, optional):
            Largest number of Kronecker eigenvalue products the MSE may sum,
            that is, the largest allowed ``prod(K_r)``. Selections over
            bigger cores raise `MseSizeError` when their MSE is requested.
            Defaults to ``10 ** 6``.

        enumeration_limit (`int`, optional):
            Largest number of selections the exhaustive oracle may visit
            before giving up with `EnumerationLimitError`. Defaults to
            ``10 ** 7``.

        surrogate_draws (`int`, optional):
            How many random selections the best-of-random reference
            optimum draws when exhaustive enumeration is not used.
            Defaults to ``10000``.

        workers (`int`, optional):
            Number of threads benchmark trials run on. By default this is
            the number of CPUs, capped by the ``KRONSAMPLER_THREADS``
            environment variable when it is set.

        base_logger (`str` | `logging.Logger`, optional):
            Base logger name or instance to use.
            If a `str` is given, it'll be passed to `logging.getLogger()`. If a
            `logging.Logger` is given, it'll be used directly. If something
            else or nothing is given, the default logger will be used.
    """

    # Current SamplingClient version
    __version__ = version.__version__

    # region Initialization

    def __init__(
            self: 'SamplingClient',
            *,
            kron_max_entries: int = DEFAULT_KRON_MAX_ENTRIES,
            mse_max_products: int = DEFAULT_MSE_MAX_PRODUCTS,
            enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
            surrogate_draws: int = DEFAULT_SURROGATE_DRAWS,
            workers: int = None,
            base_logger: typing.Union[str, logging.Logger] = None
    ):
        if isinstance(base_logger, str):
            base_logger = logging.getLogger(base_logger)
        elif not isinstance(base_logger, logging.Logger):
            base_logger = _base_log

        class _Loggers(dict):
            def __missing__(self, key):
                if key.startswith("kronsampler."):
                    key = key.split('.', maxsplit=1)[1]

                return base_logger.getChild(key)

        self._log = _Loggers()

        for name, value in (
                ('kron_max_entries', kron_max_entries),
                ('mse_max_products', mse_max_products),
                ('enumeration_limit', enumeration_limit),
                ('surrogate_draws', surrogate_draws)):
            if int(value) < 1:
                raise InvalidInputError('{} must be positive, not {}'.format(name, value))

        self.kron_max_entries = int(kron_max_entries)
        self.mse_max_products = int(mse_max_products)
        self.enumeration_limit = int(enumeration_limit)
        self.surrogate_draws = int(surrogate_draws)

        if workers is None:
            workers = helpers.default_workers()
        elif int(workers) < 1:
            raise InvalidInputError('workers must be positive, not {}'.format(workers))
        self.workers = int(workers)

        self._log[__name__].debug(
            'Client ready with %d workers, enumeration limit %d, %d surrogate draws',
            self.workers, self.enumeration_limit, self.surrogate_draws)

    # endregion

    # region Properties

    @property
    def limits(self: 'SamplingClient') -> dict:
        """
        The resource guards in effect, as a dictionary. Benchmarks store
        it in their metadata so that runs can be told apart.
        """
        return {
            'kron_max_entries': self.kron_max_entries,
            'mse_max_products': self.mse_max_products,
            'enumeration_limit': self.enumeration_limit,
            'surrogate_draws': self.surrogate_draws,
            'workers': self.workers,
        }

    # endregion
