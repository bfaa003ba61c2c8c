"""Concrete errors, each one keeping the values that caused it"""
from .base import InvalidInputError, ResourceLimitError, NumericalError


class IndexOutOfRangeError(InvalidInputError):
    """
    Occurs when a 1-based row index falls outside ``[1, universe]``.
    """
    def __init__(self, index, universe):
        super().__init__(
            'Index {} is out of range for a mode of size {}'
            .format(index, universe))

        self.index = index
        self.universe = universe

    def __reduce__(self):
        return type(self), (self.index, self.universe)


class DimensionMismatchError(InvalidInputError):
    """
    Occurs when two operands do not fit together, for example a vector
    whose length is not the product of the factor column counts.
    """
    def __init__(self, what, expected, got):
        super().__init__(
            'Dimension mismatch in {}: expected {}, got {}'
            .format(what, expected, got))

        self.what = what
        self.expected = expected
        self.got = got

    def __reduce__(self):
        return type(self), (self.what, self.expected, self.got)


class InfeasibleBudgetError(InvalidInputError):
    """
    Occurs when the sensor budget cannot satisfy the per-mode floors
    (too small) or exceeds the number of available rows (too large).
    """
    def __init__(self, budget, low, high):
        super().__init__(
            'Budget {} is infeasible, it must lie within [{}, {}]'
            .format(budget, low, high))

        self.budget = budget
        self.low = low
        self.high = high

    def __reduce__(self):
        return type(self), (self.budget, self.low, self.high)


class DegenerateInputError(InvalidInputError):
    """
    Occurs when a quantity is undefined for the given input, such as the
    normalized scores of an all-zero factor matrix.
    """
    def __init__(self, reason):
        super().__init__('Degenerate input: {}'.format(reason))
        self.reason = reason

    def __reduce__(self):
        return type(self), (self.reason,)


class UnknownAlgorithmError(InvalidInputError):
    """
    Occurs when a sampler name is not registered.
    """
    def __init__(self, name, known):
        super().__init__(
            'Unknown algorithm {!r}, expected one of: {}'
            .format(name, ', '.join(known)))

        self.name = name
        self.known = tuple(known)

    def __reduce__(self):
        return type(self), (self.name, self.known)


class KronSizeError(ResourceLimitError):
    """
    Occurs when an explicit Kronecker product would hold more entries
    than the configured cap.
    """
    def __init__(self, entries, limit):
        super().__init__(
            'Kronecker product would have {} entries (limit {})'
            .format(entries, limit))

        self.entries = entries
        self.limit = limit

    def __reduce__(self):
        return type(self), (self.entries, self.limit)


class EnumerationLimitError(ResourceLimitError):
    """
    Occurs when exhaustive enumeration would visit more selections than
    allowed. A best-of-random surrogate should be used instead.
    """
    def __init__(self, count, limit):
        super().__init__(
            'Exhaustive search would enumerate {} selections (limit {}); '
            'use a random surrogate oracle instead'.format(count, limit))

        self.count = count
        self.limit = limit

    def __reduce__(self):
        return type(self), (self.count, self.limit)


class MseSizeError(ResourceLimitError):
    """
    Occurs when the Kronecker eigenvalue products needed by the MSE
    would exceed the configured cap.
    """
    def __init__(self, products, limit):
        super().__init__(
            'MSE needs {} eigenvalue products (limit {})'
            .format(products, limit))

        self.products = products
        self.limit = limit

    def __reduce__(self):
        return type(self), (self.products, self.limit)


class SingularSelectionError(NumericalError):
    """
    Occurs when a row restriction of some mode is rank deficient, so that
    the Fisher information is singular and least squares is not unique.
    """
    def __init__(self, mode, rank, expected):
        super().__init__(
            'Selection for mode {} has rank {} but {} is required'
            .format(mode, rank, expected))

        self.mode = mode
        self.rank = rank
        self.expected = expected

    def __reduce__(self):
        return type(self), (self.mode, self.rank, self.expected)
