"""
tests for kronsampler.framepotential
"""
import math

import numpy as np
import pytest

from kronsampler import framepotential as fp, ProblemInstance, Selection, IndexSet
from kronsampler.errors import (
    InvalidInputError, DegenerateInputError, MseSizeError, SingularSelectionError
)
from kronsampler.framepotential import FractionalPoint

from .conftest import signed_factor


def test_frame_potential_running_example(running_example):
    assert fp.frame_potential(running_example, [1, 3]) == 2
    assert fp.frame_potential(running_example, [2, 4]) == 16 + 81
    assert fp.frame_potential(running_example, [1, 2, 3, 4]) == 125


def test_frame_potential_matches_pairwise_sum(rng):
    p = rng.standard_normal((8, 3))
    sel = [1, 4, 5, 8]
    rows = p[[i - 1 for i in sel]]
    expected = sum(float(a @ b) ** 2 for a in rows for b in rows)
    assert math.isclose(fp.frame_potential(p, sel), expected, rel_tol=1e-12)


def test_frame_potential_is_monotone(rng):
    p = rng.standard_normal((10, 3))
    assert fp.frame_potential(p, [1, 2, 3]) <= fp.frame_potential(p, [1, 2, 3, 7])


def test_frame_potential_product(two_mode_example):
    sel = Selection([IndexSet([1, 2], 2), IndexSet([1, 3], 3)], 'manual')
    assert fp.frame_potential_product(two_mode_example, sel) == 2 * 4


def test_batch_frame_potential(rng):
    p = rng.standard_normal((6, 2))
    x = np.array([[1, 0, 1, 1, 0, 0], [0, 1, 1, 0, 1, 1]], dtype=float)
    values = fp.batch_frame_potential(p, x)
    assert values[0] == pytest.approx(fp.frame_potential(p, [1, 3, 4]), rel=1e-12)
    assert values[1] == pytest.approx(fp.frame_potential(p, [2, 3, 5, 6]), rel=1e-12)


def test_mse_running_example(running_example):
    inst = ProblemInstance([running_example], 2)
    sel = Selection([IndexSet([2, 4], 4)], 'manual')
    assert fp.mse(inst, sel) == pytest.approx(1 / 4 + 1 / 9, rel=1e-12)


def test_mse_orthonormal_rows_is_k():
    inst = ProblemInstance([np.eye(5)[:, :3]], 3)
    sel = Selection([IndexSet([1, 2, 3], 5)], 'manual')
    assert fp.mse(inst, sel) == pytest.approx(3, rel=1e-12)


def test_mse_matches_explicit_kron(rng):
    a, b = rng.standard_normal((5, 2)), rng.standard_normal((4, 2))
    inst = ProblemInstance([a, b], 6)
    sel = Selection([IndexSet([1, 3, 4], 5), IndexSet([1, 2, 4], 4)], 'manual')

    psi = np.kron(a[[0, 2, 3]], b[[0, 1, 3]])
    expected = np.trace(np.linalg.inv(psi.T @ psi))
    assert fp.mse(inst, sel) == pytest.approx(expected, rel=1e-9)
    assert fp.mse_factorized(inst, sel) == pytest.approx(expected, rel=1e-9)


def test_mse_singular_names_the_mode(running_example):
    inst = ProblemInstance([np.eye(2), running_example], 4)
    sel = Selection([IndexSet([1, 2], 2), IndexSet([1, 2], 4)], 'manual')
    with pytest.raises(SingularSelectionError) as e:
        fp.mse(inst, sel)
    assert e.value.mode == 2
    assert e.value.rank == 1


def test_mse_guard(rng):
    inst = ProblemInstance([rng.standard_normal((6, 4)), rng.standard_normal((6, 4))], 8)
    sel = Selection([IndexSet.full(6), IndexSet.full(6)], 'manual')
    with pytest.raises(MseSizeError):
        fp.mse(inst, sel, max_products=10)


def test_sign_condition_predicates(rng):
    assert fp.has_sign_condition(signed_factor(rng, 10, 3))
    assert not fp.has_sign_condition([[1, -1], [1, 1], [2, 2]])

    assert not fp.is_non_orthogonal(np.eye(3))
    assert fp.is_non_orthogonal([[1, 1], [0, 1], [1, 0]])
    assert fp.is_non_orthogonal([[1], [0]])


def test_scores_running_example(running_example):
    assert list(fp.ffw_scores(running_example)) == [5, 20, 10, 90]
    assert sum(fp.ffw_scores(running_example)) == running_example.full_fp


def test_scores_sum_to_full_fp(rng):
    p = rng.standard_normal((20, 4))
    scores = fp.ffw_scores(p)
    assert scores.sum() == pytest.approx(fp.frame_potential(p, range(1, 21)), rel=1e-12)
    assert np.all(scores >= 0)


def test_normalized_scores():
    norm = fp.ffw_scores_normalized([[1], [2], [1]])
    assert np.allclose(norm, [1 / 6, 2 / 3, 1 / 6])
    assert norm.sum() == pytest.approx(1)


def test_normalized_scores_zero_factor():
    with pytest.raises(DegenerateInputError):
        fp.ffw_scores_normalized(np.zeros((3, 2)))


class TestExtension:
    def test_vertex_agrees_with_frame_potential(self, rng):
        a, b = rng.standard_normal((5, 2)), rng.standard_normal((4, 3))
        inst = ProblemInstance([a, b], 7)
        sel = Selection([IndexSet([1, 2, 5], 5), IndexSet([1, 2, 3, 4], 4)], 'manual')

        ext = fp.extensions_for(inst)
        value = fp.extension_value(ext, FractionalPoint.from_selection(sel))
        assert value == pytest.approx(fp.frame_potential_product(inst, sel), rel=1e-12)

    def test_gradient_matches_finite_differences(self, rng):
        a, b = rng.standard_normal((4, 2)), rng.standard_normal((3, 2))
        ext = fp.extensions_for(ProblemInstance([a, b], 5))
        x = FractionalPoint([rng.uniform(0.2, 0.8, 4), rng.uniform(0.2, 0.8, 3)])
        grads = fp.extension_gradient(ext, x)

        h = 1e-6
        for r in range(2):
            for t in range(len(x.vectors[r])):
                up = [v.copy() for v in x.vectors]
                down = [v.copy() for v in x.vectors]
                up[r][t] += h
                down[r][t] -= h
                numeric = (fp.extension_value(ext, FractionalPoint(up))
                           - fp.extension_value(ext, FractionalPoint(down))) / (2 * h)
                assert grads[r][t] == pytest.approx(numeric, rel=1e-5, abs=1e-6)

    def test_gradient_at_uniform_point_is_proportional_to_scores(self, rng):
        p = rng.standard_normal((7, 3))
        ext = fp.extensions_for(ProblemInstance([p], 4))
        eps = 0.01
        grad = fp.extension_gradient(ext, FractionalPoint.uniform([7], eps))[0]
        assert np.allclose(grad, 2 * eps * fp.ffw_scores(p), rtol=1e-10)

    @pytest.mark.parametrize('shapes', [[(9, 3)], [(7, 2), (6, 3)], [(5, 2), (6, 2), (4, 2)]])
    def test_gradient_order_does_not_depend_on_eps(self, rng, shapes):
        factors = [signed_factor(rng, n, k) if r % 2 else rng.standard_normal((n, k))
                   for r, (n, k) in enumerate(shapes)]
        ext = fp.extensions_for(ProblemInstance(factors, sum(k for _, k in shapes)))
        sizes = [n for n, _ in shapes]

        for eps in (0.1, 0.5, 1.0):
            grads = fp.extension_gradient(ext, FractionalPoint.uniform(sizes, eps))
            for g, p in zip(grads, factors):
                assert np.array_equal(np.argsort(g, kind='stable'),
                                      np.argsort(fp.ffw_scores(p), kind='stable'))

    def test_point_bounds(self):
        with pytest.raises(InvalidInputError):
            FractionalPoint([[0.5, 1.5]])
