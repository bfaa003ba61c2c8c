"""
Frame potential, estimator MSE and the closed-form multilinear extension
of the frame potential together with its gradient.

For a selection ``L`` of rows of ``Psi`` the Fisher information is
``T(L) = Psi(L)^T Psi(L)``. The frame potential is ``tr(T^T T)`` and the
MSE of the least-squares core estimate is ``tr(T^-1)``. Both factor over
the modes of a Kronecker-structured model.
"""
import functools
import logging
import operator

import numpy as np
import scipy.linalg

from . import linalg
from .errors import (
    InvalidInputError, DimensionMismatchError, DegenerateInputError,
    MseSizeError, SingularSelectionError
)
from .linalg import IndexSet
from .types import FactorMatrix

DEFAULT_MSE_MAX_PRODUCTS = 10 ** 6

_log = logging.getLogger(__name__)


def _as_index_set(sel, universe):
    if isinstance(sel, IndexSet):
        if sel.universe != universe:
            raise DimensionMismatchError('selection universe', universe, sel.universe)
        return sel
    return IndexSet(sel, universe)


def frame_potential(factor, sel):
    """
    Frame potential of the rows ``sel`` of ``factor``.

    This is the sum of the squared entries of the Gram matrix of the
    restriction, equivalently ``sum_{i,j in sel} <u_i, u_j> ** 2``.
    """
    factor = FactorMatrix.coerce(factor)
    sel = _as_index_set(sel, factor.rows)
    t = linalg.gram(factor.restrict(sel))
    return float(np.sum(t * t))


def frame_potential_product(instance, sel):
    """Frame potential of a Kronecker selection, the product over modes."""
    if len(sel.modes) != instance.mode_count:
        raise DimensionMismatchError('selection modes', instance.mode_count, len(sel.modes))

    return functools.reduce(operator.mul, (
        frame_potential(f, s) for f, s in zip(instance.factors, sel.modes)
    ), 1.0)


def batch_frame_potential(factor, indicators):
    """
    Frame potentials of many selections of the same factor at once, one per
    row of the ``(draws, N)`` 0/1 ``indicators``. Entry ``k`` is
    ``x_k^T Q x_k`` with ``Q = (Psi Psi^T) ** 2`` taken entrywise.
    """
    factor = FactorMatrix.coerce(factor)
    x = np.atleast_2d(np.asarray(indicators, dtype=np.float64))
    if x.shape[1] != factor.rows:
        raise DimensionMismatchError('indicator columns', factor.rows, x.shape[1])

    p = factor.matrix
    q = p @ p.T
    q *= q
    return np.einsum('dn,dn->d', x @ q, x)


def _mode_eigenvalues(factor, sel, mode):
    t = linalg.gram(factor.restrict(sel))
    if t.shape[0] == 0 or len(sel) == 0:
        raise SingularSelectionError(mode, 0, factor.cols)

    eig = scipy.linalg.eigh(t, eigvals_only=True)
    top = eig[-1] if eig.size else 0.0
    tol = t.shape[0] * np.finfo(np.float64).eps * max(top, 0.0)
    rank = int(np.count_nonzero(eig > tol)) if top > 0 else 0
    if rank < factor.cols:
        raise SingularSelectionError(mode, rank, factor.cols)
    return eig


def mse(instance, sel, *, max_products=DEFAULT_MSE_MAX_PRODUCTS):
    """
    ``tr(T^-1(L))`` for the Kronecker selection ``sel``.

    The eigenvalues of ``T`` are all products of one eigenvalue per mode,
    so the reciprocals of every such product are summed. That needs
    ``prod(K_r)`` terms, which is refused above ``max_products``.

    Raises `SingularSelectionError` naming the first rank-deficient mode.
    """
    if len(sel.modes) != instance.mode_count:
        raise DimensionMismatchError('selection modes', instance.mode_count, len(sel.modes))

    products = functools.reduce(operator.mul, instance.floors, 1)
    if max_products is not None and products > max_products:
        raise MseSizeError(products, max_products)

    inverses = [
        1.0 / _mode_eigenvalues(f, s, r)
        for r, (f, s) in enumerate(zip(instance.factors, sel.modes), start=1)
    ]
    return float(np.sum(functools.reduce(np.multiply.outer, inverses)))


def mse_factorized(instance, sel):
    """
    Same value as `mse` through ``prod_r tr(T_r^-1)``, in ``O(sum K_r)``
    once the per-mode eigenvalues are known.
    """
    if len(sel.modes) != instance.mode_count:
        raise DimensionMismatchError('selection modes', instance.mode_count, len(sel.modes))

    return functools.reduce(operator.mul, (
        float(np.sum(1.0 / _mode_eigenvalues(f, s, r)))
        for r, (f, s) in enumerate(zip(instance.factors, sel.modes), start=1)
    ), 1.0)


def has_sign_condition(factor):
    """Whether every row has all of its entries of the same sign."""
    p = FactorMatrix.coerce(factor).matrix
    return bool(np.all(np.all(p >= 0, axis=1) | np.all(p <= 0, axis=1)))


def is_non_orthogonal(factor, *, rtol=1e-12):
    """
    Whether some pair of columns has a non-zero inner product.

    A single column has nothing to be orthogonal to and counts as
    non-orthogonal.
    """
    factor = FactorMatrix.coerce(factor)
    if factor.cols == 1:
        return True

    g = factor.gram
    off = g[~np.eye(factor.cols, dtype=bool)]
    scale = max(float(np.max(np.abs(np.diag(g)))), np.finfo(np.float64).tiny)
    return bool(np.any(np.abs(off) > rtol * scale))


class ModeExtension:
    """
    Per-mode data of the closed-form extension: the factor, its Gram
    matrix ``m_ij = p_i^T p_j`` and the full frame potential ``F^r``.
    """
    def __init__(self, factor):
        self.factor = FactorMatrix.coerce(factor)

    @property
    def gram(self):
        return self.factor.gram

    @property
    def full_fp(self):
        return self.factor.full_fp

    def weighted_gram(self, x):
        """``Psi^T diag(x) Psi``, the fractional counterpart of ``T``."""
        p = self.factor.matrix
        return p.T @ (p * x[:, None])

    def value(self, x):
        a = self.weighted_gram(x)
        return float(np.sum(a * a))

    def gradient(self, x):
        """Partial derivatives of `value`: ``2 u_t A u_t^T`` for each row."""
        p = self.factor.matrix
        a = self.weighted_gram(x)
        return 2.0 * np.einsum('ti,ij,tj->t', p, a, p)


class FractionalPoint:
    """
    One vector ``x^r`` in ``[0, 1]^{N_r}`` per mode, the relaxation of a
    selection.
    """
    def __init__(self, vectors):
        self.vectors = tuple(linalg.as_vector(v, name='fractional point')
                             for v in vectors)
        for v in self.vectors:
            if v.size and (v.min() < 0 or v.max() > 1):
                raise InvalidInputError(
                    'Fractional point components must lie within [0, 1]')

    @classmethod
    def uniform(cls, sizes, value):
        """The point ``value * 1`` in every mode."""
        return cls([np.full(n, float(value)) for n in sizes])

    @classmethod
    def from_selection(cls, sel):
        """The binary vertex matching ``sel``."""
        return cls(sel.indicators())


def extensions_for(instance):
    return [ModeExtension(f) for f in instance.factors]


def _check_point(ext, x):
    if len(ext) != len(x.vectors):
        raise DimensionMismatchError('fractional point modes', len(ext), len(x.vectors))
    for r, (e, v) in enumerate(zip(ext, x.vectors), start=1):
        if v.size != e.factor.rows:
            raise DimensionMismatchError(
                'fractional point of mode {}'.format(r), e.factor.rows, v.size)


def extension_value(ext, x):
    """
    Closed-form extension ``prod_r sum_ij [sum_n x_n^r p_ni p_nj] ** 2``.

    At binary vertices this agrees with `frame_potential_product` of the
    matching selection.
    """
    _check_point(ext, x)
    return functools.reduce(operator.mul, (
        e.value(v) for e, v in zip(ext, x.vectors)
    ), 1.0)


def extension_gradient(ext, x):
    """
    Exact gradient of `extension_value`, one array per mode.

    The product rule scales the gradient of each mode by the extension
    values of every other mode.
    """
    _check_point(ext, x)
    values = [e.value(v) for e, v in zip(ext, x.vectors)]
    grads = []
    for r, (e, v) in enumerate(zip(ext, x.vectors)):
        others = functools.reduce(
            operator.mul, (val for a, val in enumerate(values) if a != r), 1.0)
        grads.append(others * e.gradient(v))
    return grads


def ffw_scores(factor):
    """
    Row scores ``d_n = sum_ij m_ij p_ni p_nj = u_n M u_n^T``.

    They are proportional to the gradient of the extension at any uniform
    point ``eps * 1`` and cost ``O(N K^2)`` after the Gram matrix.
    """
    factor = FactorMatrix.coerce(factor)
    p = factor.matrix
    return np.einsum('nj,nj->n', p @ factor.gram, p)


def ffw_scores_normalized(factor):
    """`ffw_scores` divided by the full frame potential ``F^r``."""
    factor = FactorMatrix.coerce(factor)
    if factor.full_fp <= 0:
        raise DegenerateInputError(
            'factor {} is the zero matrix, its scores cannot be normalized'
            .format(factor))
    return ffw_scores(factor) / factor.full_fp
