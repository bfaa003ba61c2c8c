"""
This module holds every error the library may raise. All of them inherit
from `KronSamplerError`, and the ``code`` of each base class doubles as the
exit code of the command line interface.
"""
from .base import (
    KronSamplerError, InvalidInputError, ResourceLimitError, NumericalError,
    base_errors
)
from .common import (
    IndexOutOfRangeError, DimensionMismatchError, InfeasibleBudgetError,
    DegenerateInputError, UnknownAlgorithmError, KronSizeError,
    EnumerationLimitError, MseSizeError, SingularSelectionError
)
