"""
tests for kronsampler.linalg
"""
import numpy as np
import pytest

from kronsampler import linalg
from kronsampler.errors import (
    IndexOutOfRangeError, InvalidInputError, DimensionMismatchError, KronSizeError
)
from kronsampler.linalg import IndexSet


class TestIndexSet:
    def test_sorted_and_one_based(self):
        s = IndexSet([3, 1], 4)
        assert s.indices == (1, 3)
        assert list(s.zero_based) == [0, 2]
        assert list(s.indicator()) == [1, 0, 1, 0]

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError) as e:
            IndexSet([0, 2], 4)
        assert e.value.index == 0
        with pytest.raises(IndexOutOfRangeError):
            IndexSet([5], 4)

    def test_duplicates(self):
        with pytest.raises(InvalidInputError):
            IndexSet([2, 2], 4)

    def test_complement(self):
        assert IndexSet([1, 3], 4).complement() == IndexSet([2, 4], 4)
        assert len(IndexSet.full(5).complement()) == 0

    def test_hashable(self):
        assert len({IndexSet([1, 2], 3), IndexSet([2, 1], 3)}) == 1


def test_restrict_identity_rows():
    out = linalg.restrict_rows(np.eye(3), IndexSet([1, 3], 3))
    assert np.array_equal(out, [[1, 0, 0], [0, 0, 1]])


def test_restrict_full_selection(rng):
    m = rng.standard_normal((5, 2))
    assert np.array_equal(linalg.restrict_rows(m, IndexSet.full(5)), m)


def test_restrict_running_example(running_example):
    out = linalg.restrict_rows(running_example.matrix, [1, 3])
    assert np.array_equal(out, [[1, 0], [0, 1]])


def test_restrict_wrong_universe():
    with pytest.raises(DimensionMismatchError):
        linalg.restrict_rows(np.eye(3), IndexSet([1], 4))


def test_gram(running_example, rng):
    assert np.array_equal(linalg.gram(np.eye(3)), np.eye(3))
    assert np.array_equal(linalg.gram(running_example.matrix), [[5, 0], [0, 10]])

    g = linalg.gram(rng.standard_normal((7, 4)))
    assert np.allclose(g, g.T, rtol=0, atol=1e-12)


def test_gram_is_sum_of_outer_products(rng):
    m = rng.standard_normal((10, 3))
    s = IndexSet([2, 5, 6, 9], 10)
    expected = sum(np.outer(m[i - 1], m[i - 1]) for i in s)
    assert np.allclose(linalg.gram(linalg.restrict_rows(m, s)), expected, rtol=1e-12, atol=0)


def test_kron_small():
    assert np.array_equal(linalg.kron(np.eye(2), np.eye(3)), np.eye(6))
    assert np.array_equal(linalg.kron([[1], [2]], [[3]]), [[3], [6]])


def test_kron_index_formula(rng):
    a = rng.standard_normal((3, 2))
    b = rng.standard_normal((2, 2))
    k = linalg.kron(a, b)
    for i in range(3):
        for j in range(2):
            for p in range(2):
                for q in range(2):
                    assert k[i * 2 + p, j * 2 + q] == a[i, j] * b[p, q]


def test_kron_mixed_product(rng):
    a, b = rng.standard_normal((3, 2)), rng.standard_normal((4, 3))
    c, d = rng.standard_normal((2, 5)), rng.standard_normal((3, 2))
    left = linalg.kron(a, b) @ linalg.kron(c, d)
    assert np.allclose(left, linalg.kron(a @ c, b @ d), rtol=1e-10, atol=1e-12)


def test_kron_guard():
    with pytest.raises(KronSizeError) as e:
        linalg.kron(np.ones((100, 100)), np.ones((100, 100)), max_entries=10 ** 6)
    assert e.value.entries == 10 ** 8


def test_kron_apply_single_factor(rng):
    m = rng.standard_normal((5, 3))
    x = rng.standard_normal(3)
    assert np.allclose(linalg.kron_apply([m], x), m @ x)


def test_kron_apply_identities(rng):
    x = rng.standard_normal(12)
    assert np.allclose(linalg.kron_apply([np.eye(3), np.eye(4)], x), x)


def test_kron_apply_matches_explicit(rng):
    a, b = rng.standard_normal((4, 2)), rng.standard_normal((3, 2))
    x = rng.standard_normal(4)
    expected = linalg.kron(a, b) @ x
    assert np.allclose(linalg.kron_apply([a, b], x), expected, rtol=1e-10, atol=1e-12)


def test_kron_apply_three_factors(rng):
    mats = [rng.standard_normal((n, k)) for n, k in ((3, 2), (2, 2), (4, 3))]
    x = rng.standard_normal(12)
    expected = linalg.kron_all(mats) @ x
    assert np.allclose(linalg.kron_apply(mats, x), expected, rtol=1e-10, atol=1e-12)


def test_kron_apply_mismatch(rng):
    with pytest.raises(DimensionMismatchError):
        linalg.kron_apply([np.eye(2), np.eye(3)], np.ones(5))


def test_pinv_identity_and_orthonormal(rng):
    assert np.allclose(linalg.pinv(np.eye(4)), np.eye(4))

    q, _ = np.linalg.qr(rng.standard_normal((6, 3)))
    assert np.allclose(linalg.pinv(q), q.T, atol=1e-12)


def test_pinv_moore_penrose(rng):
    m = rng.standard_normal((6, 3))
    p = linalg.pinv(m)
    assert np.allclose(p @ m, np.eye(3), atol=1e-8)
    assert np.allclose(m @ p @ m, m, atol=1e-8)
    assert np.allclose(p @ m @ p, p, atol=1e-8)
    assert np.allclose((m @ p).T, m @ p, atol=1e-8)
    assert np.allclose((p @ m).T, p @ m, atol=1e-8)


def test_pinv_reports_rank():
    m = np.array([[1.0, 2.0], [2.0, 4.0], [3.0, 6.0]])
    _, rank = linalg.pinv(m, return_rank=True)
    assert rank == 1
    assert linalg.matrix_rank(m) == 1


def test_pinv_kronecker_identity(rng):
    a, b = rng.standard_normal((5, 2)), rng.standard_normal((4, 3))
    left = linalg.pinv(linalg.kron(a, b))
    right = linalg.kron(linalg.pinv(a), linalg.pinv(b))
    assert np.allclose(left, right, rtol=1e-8, atol=1e-10)


def test_as_matrix_rejects_bad_input():
    with pytest.raises(DimensionMismatchError):
        linalg.as_matrix([1, 2, 3])
    with pytest.raises(InvalidInputError):
        linalg.as_matrix([[1, np.nan]])

    m = linalg.as_matrix([[1, 2]])
    assert not m.flags.writeable
