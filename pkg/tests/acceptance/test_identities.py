"""
Algebraic identities the samplers rely on, checked at scale.
"""
import itertools

import numpy as np
import pytest

from kronsampler import framepotential as fp, linalg, ProblemInstance, Selection, IndexSet
from kronsampler.framepotential import FractionalPoint

from .conftest import relative_error


def test_three_score_formulas_agree():
    rng = np.random.default_rng(0)
    for _ in range(50):
        u = rng.standard_normal((200, 40))
        m = u.T @ u

        scores = fp.ffw_scores(u)
        quadratic = np.array([row @ m @ row for row in u])
        pairwise = ((u @ u.T) ** 2).sum(axis=1)
        assert np.allclose(scores, quadratic, rtol=1e-10, atol=0)
        assert np.allclose(scores, pairwise, rtol=1e-10, atol=0)


def _vertices(sizes):
    for bits in itertools.product(*(itertools.product((0, 1), repeat=n) for n in sizes)):
        yield bits


def _check_every_vertex(inst):
    ext = fp.extensions_for(inst)
    for bits in _vertices(inst.capacities):
        sel = Selection([IndexSet.from_zero_based(np.flatnonzero(b), len(b)) for b in bits],
                        'vertex')
        value = fp.extension_value(ext, FractionalPoint([np.array(b, dtype=float) for b in bits]))
        expected = fp.frame_potential_product(inst, sel)
        assert value == pytest.approx(expected, rel=1e-9, abs=1e-12)


def test_extension_is_exact_at_vertices():
    rng = np.random.default_rng(1)
    for _ in range(20):
        n, k = int(rng.integers(3, 11)), int(rng.integers(1, 3))
        _check_every_vertex(ProblemInstance([rng.standard_normal((n, k))], k))

    for _ in range(5):
        shapes = [(int(rng.integers(2, 7)), 1), (int(rng.integers(3, 7)), 2)]
        factors = [rng.standard_normal(s) for s in shapes]
        _check_every_vertex(ProblemInstance(factors, 3))


@pytest.mark.slow
def test_kronecker_pseudoinverse():
    rng = np.random.default_rng(2)
    for _ in range(20):
        n1, n2 = (int(x) for x in rng.integers(8, 65, size=2))
        k1, k2 = (int(x) for x in rng.integers(1, 8, size=2))
        a, b = rng.standard_normal((n1, k1)), rng.standard_normal((n2, k2))

        left = linalg.pinv(linalg.kron(a, b))
        right = linalg.kron(linalg.pinv(a), linalg.pinv(b))
        assert relative_error(left, right) < 1e-8
