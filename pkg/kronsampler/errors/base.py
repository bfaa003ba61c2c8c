class KronSamplerError(Exception):
    """Base class for every error raised by the library."""
    code = 1
    message = 'ERROR'

    def __init__(self, message=None, code=None):
        super().__init__('{}: {}'.format(
            self.__class__.__name__, message or self.message))

        self.code = code or self.code
        self.message = message or self.message

    def __reduce__(self):
        return type(self), (self.message, self.code)


class InvalidInputError(KronSamplerError):
    """
    The input does not describe a valid problem: wrong shapes, indices out
    of range, budgets that cannot be met and so on. Fix the input and retry.
    """
    code = 2
    message = 'INVALID_INPUT'


class ResourceLimitError(KronSamplerError):
    """
    The computation would exceed one of the configured size guards. Either
    raise the guard or pick a cheaper method (e.g. a random surrogate).
    """
    code = 3
    message = 'RESOURCE_LIMIT'


class NumericalError(KronSamplerError):
    """
    The inputs are valid but the requested quantity does not exist
    numerically, such as the MSE of a rank-deficient selection.
    """
    code = 4
    message = 'NUMERICAL'


base_errors = {x.code: x for x in (
    InvalidInputError, ResourceLimitError, NumericalError
)}
