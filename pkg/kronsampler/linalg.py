"""
Dense real matrix primitives shared by the whole library: validation, row
restriction, Gram and Kronecker products and the Moore-Penrose inverse.

Matrices are plain float64 `numpy.ndarray` objects. Row indices crossing
the public interface are 1-based, as in the sampling model notation.
"""
import functools
import logging
import operator

import numpy as np

from .errors import (
    InvalidInputError, IndexOutOfRangeError, DimensionMismatchError,
    KronSizeError
)

DEFAULT_KRON_MAX_ENTRIES = 10 ** 8

_log = logging.getLogger(__name__)


def as_matrix(m, *, name='matrix'):
    """
    Validates and converts ``m`` into a read-only float64 matrix.

    :param m: anything `numpy.asarray` understands as a 2-D real array.
    :param name: how to call the operand in error messages.
    :return: a new C-contiguous array that callers cannot mutate.
    """
    arr = np.array(m, dtype=np.float64, copy=True, order='C')
    if arr.ndim != 2:
        raise DimensionMismatchError(name, 'a 2-D matrix', arr.shape)
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionMismatchError(name, 'positive rows and cols', arr.shape)
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError('{} has non-finite entries'.format(name))

    arr.flags.writeable = False
    return arr


def as_vector(x, length=None, *, name='vector'):
    """Like `as_matrix` but for 1-D vectors, optionally of a fixed length."""
    arr = np.array(x, dtype=np.float64, copy=True).reshape(-1)
    if length is not None and arr.size != length:
        raise DimensionMismatchError(name, length, arr.size)
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError('{} has non-finite entries'.format(name))

    arr.flags.writeable = False
    return arr


def _integral(indices):
    raw = indices.reshape(-1) if isinstance(indices, np.ndarray) \
        else np.array(list(indices))
    if raw.size == 0:
        return np.zeros(0, dtype=np.int64)
    if raw.dtype.kind in 'iu':
        return raw.astype(np.int64)
    if raw.dtype.kind == 'b':
        raise InvalidInputError('Row indices must be integers, not booleans')

    try:
        as_float = raw.astype(np.float64)
    except (TypeError, ValueError):
        raise InvalidInputError(
            'Row indices must be integers, not {}'.format(raw.tolist())) from None
    if not np.all(np.isfinite(as_float)) or np.any(as_float != np.trunc(as_float)):
        raise InvalidInputError(
            'Row indices must be integers, not {}'.format(raw.tolist()))
    return as_float.astype(np.int64)


class IndexSet:
    """
    A set of strictly increasing 1-based row indices into a mode of size
    ``universe``.

    Instances are immutable and hashable, so they can be used as keys and
    shared freely across threads.
    """
    __slots__ = ('_indices', '_universe')

    def __init__(self, indices, universe):
        universe = int(universe)
        if universe < 1:
            raise InvalidInputError(
                'Index universe must be positive, not {}'.format(universe))

        values = _integral(indices)
        outside = (values < 1) | (values > universe)
        if outside.any():
            raise IndexOutOfRangeError(int(values[np.argmax(outside)]), universe)

        ordered = np.unique(values)
        if ordered.size != values.size:
            raise InvalidInputError(
                'Duplicate indices in {}'.format(values.tolist()))

        self._indices = tuple(ordered.tolist())
        self._universe = universe

    @classmethod
    def full(cls, universe):
        """The set of every row of the mode."""
        return cls(np.arange(1, universe + 1), universe)

    @classmethod
    def from_zero_based(cls, indices, universe):
        return cls(_integral(np.asarray(indices)) + 1, universe)

    @property
    def indices(self):
        return self._indices

    @property
    def universe(self):
        return self._universe

    @property
    def zero_based(self):
        """The indices as a 0-based integer array, suitable for fancy indexing."""
        return np.fromiter((i - 1 for i in self._indices),
                           dtype=np.intp, count=len(self._indices))

    def indicator(self):
        """0/1 float vector of length ``universe`` marking the members."""
        x = np.zeros(self._universe)
        x[self.zero_based] = 1.0
        return x

    def complement(self):
        members = set(self._indices)
        return IndexSet(
            (i for i in range(1, self._universe + 1) if i not in members),
            self._universe)

    def __len__(self):
        return len(self._indices)

    def __iter__(self):
        return iter(self._indices)

    def __contains__(self, item):
        return item in self._indices

    def __eq__(self, other):
        if not isinstance(other, IndexSet):
            return NotImplemented
        return (self._universe == other._universe
                and self._indices == other._indices)

    def __hash__(self):
        return hash((self._universe, self._indices))

    def __repr__(self):
        return 'IndexSet({}, universe={})'.format(
            list(self._indices), self._universe)


def restrict_rows(m, s):
    """
    Keeps the rows of ``m`` listed in ``s``, in the order of ``s``.

    This is what applying the selection matrix of a mode to its factor
    does, without ever forming the selection matrix.
    """
    m = np.asarray(m, dtype=np.float64)
    if not isinstance(s, IndexSet):
        s = IndexSet(s, m.shape[0])
    if s.universe != m.shape[0]:
        raise DimensionMismatchError('restrict_rows', m.shape[0], s.universe)

    return m[s.zero_based]


def gram(m):
    """
    Returns ``mᵀm``. The result is symmetrized explicitly so that it is
    exactly symmetric, not just up to rounding.
    """
    m = np.asarray(m, dtype=np.float64)
    g = m.T @ m
    return (g + g.T) / 2


def _check_kron_size(shapes, max_entries):
    rows = functools.reduce(operator.mul, (s[0] for s in shapes), 1)
    cols = functools.reduce(operator.mul, (s[1] for s in shapes), 1)
    entries = rows * cols
    if max_entries is not None and entries > max_entries:
        raise KronSizeError(entries, max_entries)
    return entries


def kron(a, b, *, max_entries=DEFAULT_KRON_MAX_ENTRIES):
    """
    Explicit Kronecker product in the standard block layout.

    Raises `KronSizeError` when the result would exceed ``max_entries``.
    """
    a = np.atleast_2d(np.asarray(a, dtype=np.float64))
    b = np.atleast_2d(np.asarray(b, dtype=np.float64))
    _check_kron_size((a.shape, b.shape), max_entries)
    return np.kron(a, b)


def kron_all(factors, *, max_entries=DEFAULT_KRON_MAX_ENTRIES):
    """Explicit Kronecker product of every factor, first factor outermost."""
    mats = [np.atleast_2d(np.asarray(f, dtype=np.float64)) for f in factors]
    if not mats:
        raise InvalidInputError('kron_all needs at least one factor')

    _check_kron_size([m.shape for m in mats], max_entries)
    return functools.reduce(np.kron, mats)


def kron_apply(factors, x):
    """
    Computes ``(A_1 ⊗ ... ⊗ A_R) x`` without forming the Kronecker product.

    ``x`` is folded into a tensor of shape ``(cols_1, ..., cols_R)`` (the
    first factor varies slowest, matching `numpy.kron`) and every factor
    is applied as a mode product. Only the output and one intermediate
    tensor are ever held in memory.
    """
    mats = [np.asarray(f, dtype=np.float64) for f in factors]
    if not mats:
        raise InvalidInputError('kron_apply needs at least one factor')
    for i, m in enumerate(mats):
        if m.ndim != 2:
            raise DimensionMismatchError(
                'kron_apply factor {}'.format(i + 1), 'a 2-D matrix', m.shape)

    x = np.asarray(x, dtype=np.float64).reshape(-1)
    cols = tuple(m.shape[1] for m in mats)
    expected = functools.reduce(operator.mul, cols, 1)
    if x.size != expected:
        raise DimensionMismatchError('kron_apply vector', expected, x.size)

    y = x.reshape(cols)
    for k, m in enumerate(mats):
        # tensordot puts the new axis first, move it back into place
        y = np.moveaxis(np.tensordot(m, y, axes=(1, k)), 0, k)

    return np.ascontiguousarray(y).reshape(-1)


def pinv(m, *, return_rank=False):
    """
    Moore-Penrose pseudoinverse through the singular value decomposition.

    Singular values below ``max(rows, cols) * eps * sigma_max`` are treated
    as zero, which is the conventional numerical rank tolerance.

    :param m: the matrix to invert.
    :param return_rank: whether to also return the numerical rank.
    :return: the pseudoinverse, or ``(pseudoinverse, rank)``.
    """
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionMismatchError('pinv', 'a 2-D matrix', m.shape)

    u, s, vt = np.linalg.svd(m, full_matrices=False)
    if s.size and s[0] > 0:
        cutoff = max(m.shape) * np.finfo(np.float64).eps * s[0]
        keep = s > cutoff
    else:
        keep = np.zeros(s.shape, dtype=bool)

    rank = int(np.count_nonzero(keep))
    if rank < min(m.shape):
        _log.debug('pinv of %s matrix truncated to rank %d', m.shape, rank)

    s_inv = np.zeros_like(s)
    s_inv[keep] = 1.0 / s[keep]
    result = (vt.T * s_inv) @ u.T

    if return_rank:
        return result, rank
    return result


def matrix_rank(m):
    """Numerical rank using the same tolerance as `pinv`."""
    m = np.asarray(m, dtype=np.float64)
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if not s.size or s[0] <= 0:
        return 0
    return int(np.count_nonzero(s > max(m.shape) * np.finfo(np.float64).eps * s[0]))
