import numpy as np
import pytest

from tensorspectra.algebra import lp_norm
from tensorspectra.decomp import (
    TuckerTriple,
    givens_orthonormal,
    rank1_objective,
    stack_rank1_factors,
    total_orthogonality_residual,
    tucker_core,
    tucker_reconstruct,
)
from tensorspectra.errors import OrthonormalityError, ShapeError
from tensorspectra.special import kronecker
from tensorspectra.tensor import as_array, max_abs


def test_givens_is_orthonormal(rng):
    G = givens_orthonormal(4, rng)
    assert max_abs(G.T @ G - np.eye(4)) < 1e-13


def test_tucker_round_trip(rng):
    D = rng.normal(size=(3, 3, 3))
    t = TuckerTriple(*(givens_orthonormal(3, rng) for _ in range(3)))
    core = tucker_core(D, t)
    assert max_abs(as_array(tucker_reconstruct(core, t)) - D) < 1e-10
    assert abs(np.linalg.norm(as_array(core)) - np.linalg.norm(D)) < 1e-10


def test_tucker_core_formula(rng):
    D = rng.normal(size=(2, 3, 4))
    Q, S, U = givens_orthonormal(2, rng), givens_orthonormal(3, rng), givens_orthonormal(4, rng)
    core = as_array(tucker_core(D, TuckerTriple(Q, S, U)))
    assert max_abs(core - np.einsum("iy,jr,kv,ijk->yrv", Q, S, U, D)) < 1e-12


def test_identity_triple(rng):
    D = rng.normal(size=(2, 3, 2))
    assert max_abs(as_array(tucker_core(D, TuckerTriple.identity(2, 3, 2))) - D) == 0.0


def test_triple_validation():
    with pytest.raises(OrthonormalityError):
        TuckerTriple(np.eye(2) * 2, np.eye(2), np.eye(2))
    with pytest.raises(ShapeError):
        TuckerTriple(np.ones((2, 3)), np.eye(2), np.eye(2))
    with pytest.raises(ShapeError):
        tucker_core(np.ones((3, 3, 3)), TuckerTriple.identity(2, 2, 2))


def test_total_orthogonality():
    assert total_orthogonality_residual(kronecker(3, 3)) == 0.0
    assert total_orthogonality_residual(np.ones((2, 2, 2))) > 0


def test_rank1_objective_vectors(rng):
    u, v, w = rng.normal(size=2), rng.normal(size=3), rng.normal(size=4)
    lam = 1.7
    A = lam ** 3 * np.einsum("i,j,k->ijk", u, v, w)
    assert rank1_objective([(u, v, w)], [lam], A) < 1e-12
    assert rank1_objective([], [], A) == pytest.approx(lp_norm(A, 3))


def test_rank1_objective_two_terms(rng):
    facs = [tuple(rng.normal(size=3) for _ in range(3)) for _ in range(2)]
    lams = [0.5, 2.0]
    A = sum(l ** 3 * np.einsum("i,j,k->ijk", *f) for f, l in zip(facs, lams))
    assert rank1_objective(facs, lams, A) < 1e-12


def test_slice_and_vector_paths_agree(rng):
    u, v, w = rng.normal(size=2), rng.normal(size=2), rng.normal(size=2)
    A = rng.normal(size=(2, 2, 2))
    slices = (np.outer(u, np.ones(2)), np.outer(np.ones(2), v), np.outer(np.ones(2), w))
    assert rank1_objective([slices], [1.3], A) == pytest.approx(rank1_objective([(u, v, w)], [1.3], A), abs=1e-12)


def test_stack_shapes(rng):
    M, N, P = stack_rank1_factors([(np.ones(2), np.ones(3), np.ones(4))] * 5, [1.0] * 5, (2, 3, 4))
    assert M.shape == (2, 5, 4) and N.shape == (2, 3, 5) and P.shape == (5, 3, 4)
    with pytest.raises(ShapeError):
        stack_rank1_factors([(np.ones(2), np.ones(3), np.ones(4))], [1.0, 2.0], (2, 3, 4))
