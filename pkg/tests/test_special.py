import itertools

import numpy as np
import pytest

from conftest import crandn
from tensorspectra import algebra as alg
from tensorspectra import special as sp
from tensorspectra.errors import NotSymmetricError, ShapeError
from tensorspectra.tensor import as_array, max_abs

S3 = list(itertools.permutations((1, 2, 3)))
AXIS_INDEX = {"row": 0, "column": 1, "depth": 2}


def direct_permute(a, sigma, axis):
    inv = np.argsort(np.array(sigma) - 1)
    return np.take(a, inv, axis=AXIS_INDEX[axis])


def compose(tau, sigma):
    """(tau o sigma)(k) = tau(sigma(k))."""
    return tuple(tau[s - 1] for s in sigma)


def test_kronecker():
    K = as_array(sp.kronecker(4, 2))
    assert K[0, 0, 0, 0] == 1 and K[1, 1, 1, 1] == 1 and K.sum() == 2
    with pytest.raises(ValueError):
        sp.kronecker(1, 2)


def test_identity_family_is_transpose_tower():
    I, I1, I2 = (as_array(x) for x in sp.identity_family(3))
    assert I[0, 1, 1] == 1 and I[0, 1, 2] == 0
    assert np.array_equal(I1, np.transpose(I, (1, 2, 0)))
    assert np.array_equal(I2, np.transpose(I, (2, 0, 1)))


def test_permutation_tensor_entries():
    P = as_array(sp.permutation_tensor((2, 3, 1)))
    for m in range(3):
        for n in range(3):
            for p in range(3):
                assert P[m, n, p] == (1 if p + 1 == (2, 3, 1)[n] else 0)
    with pytest.raises(ValueError):
        sp.permutation_tensor((1, 1, 2))


@pytest.mark.parametrize("sigma", S3)
def test_transposition_sequence_composes(sigma):
    cur = tuple(range(1, 4))
    for i, j in sp.transposition_sequence(sigma):
        t = list(range(1, 4))
        t[i - 1], t[j - 1] = j, i
        cur = compose(tuple(t), cur)
    assert cur == sigma


@pytest.mark.parametrize("axis", ["row", "column", "depth"])
@pytest.mark.parametrize("sigma", S3)
def test_slice_permute_exhaustive(sigma, axis):
    A = np.random.default_rng(4).integers(-9, 10, size=(3, 3, 3)).astype(float)
    got = as_array(sp.slice_permute(A, sigma, axis))
    assert np.array_equal(got, direct_permute(A, sigma, axis))


@pytest.mark.parametrize("sigma", [s for s in S3 if compose(s, s) == (1, 2, 3)])
def test_single_conjugation_on_involutions(sigma):
    A = np.random.default_rng(5).integers(-9, 10, size=(3, 3, 3)).astype(float)
    got = as_array(sp.conjugate_slices(A, sp.permutation_tensor(sigma), "depth"))
    assert np.array_equal(got, direct_permute(A, sigma, "depth"))


def test_single_conjugation_fails_for_three_cycle():
    # one conjugation by P applies sigma^-1 on one side and sigma on the other
    A = np.random.default_rng(6).integers(-9, 10, size=(3, 3, 3)).astype(float)
    got = as_array(sp.conjugate_slices(A, sp.permutation_tensor((2, 3, 1)), "depth"))
    assert not np.array_equal(got, direct_permute(A, (2, 3, 1), "depth"))


def test_slice_permute_composition_law():
    A = np.random.default_rng(7).integers(-9, 10, size=(3, 3, 3)).astype(float)
    for sigma in S3:
        for tau in S3:
            two = sp.slice_permute(sp.slice_permute(A, sigma), tau)
            one = sp.slice_permute(A, compose(tau, sigma))
            assert np.array_equal(as_array(two), as_array(one))


def test_slice_permute_validates():
    with pytest.raises(ShapeError):
        sp.slice_permute(np.ones((2, 2, 2)), (1, 2, 3))
    with pytest.raises(ValueError):
        sp.slice_permute(np.ones((3, 3, 3)), (1, 2, 3), "diagonal")


@pytest.mark.parametrize("l", [2, 3])
def test_scaling_family_order3(rng, l):
    W = rng.normal(size=(l, l))
    W = W + W.T
    fam = sp.scaling_family(W, 3)
    A = crandn(rng, (l, l, l))
    ref = np.einsum("mn,mnp,np->mnp", W, A, W)
    assert max_abs(as_array(sp.apply_scaling(A, fam)) - ref) < 1e-12
    a, b, c = fam.cube_triple()
    cube = as_array(alg.ternary_product(a, b, c))
    assert max_abs(cube - np.einsum("mn,mp->mnp", W ** 3, np.eye(l))) < 1e-12


def test_scaling_family_order4(rng):
    W = rng.normal(size=(2, 2))
    W = W + W.T
    fam = sp.scaling_family(W, 4)
    A = crandn(rng, (2, 2, 2, 2))
    ref = np.einsum("ba,abcd,bc,bd->abcd", W, A, W, W)
    assert max_abs(as_array(sp.apply_scaling(A, fam)) - ref) < 1e-12


def test_scaling_family_ones_is_identity(rng):
    fam = sp.scaling_family(np.ones((3, 3)), 3)
    A = crandn(rng, (3, 3, 3))
    assert max_abs(as_array(sp.apply_scaling(A, fam)) - A) < 1e-12


def test_scaling_family_rejects_asymmetric():
    with pytest.raises(NotSymmetricError):
        sp.scaling_family(np.array([[1.0, 2.0], [3.0, 4.0]]))
    with pytest.raises(ValueError):
        sp.scaling_family(np.eye(2), 2)


def test_diagonal_residual(rng):
    W = rng.normal(size=(3, 3))
    with pytest.raises(NotSymmetricError):
        sp.diagonal_from_weights(W)
    W = W + W.T
    assert sp.diagonal_residual(sp.diagonal_from_weights(W)) < 1e-12
    assert sp.diagonal_residual(crandn(rng, (3, 3, 3))) > 1e-3


def test_kronecker_is_orthogonal():
    first, inv = sp.orthogonality_residuals(sp.kronecker(3, 3))
    assert first == 0.0 and inv == 0.0


def test_first_orthogonality_does_not_imply_invariance():
    Q = sp.first_orthogonal_sample(3, np.random.default_rng(78))
    first, inv = sp.orthogonality_residuals(Q)
    assert first < 1e-12
    assert inv > 1e-6


def test_inverse_pair_residual_identity(rng):
    I, _, I2 = sp.identity_family(3)
    M = crandn(rng, (3, 3, 3))
    assert sp.inverse_pair_residual(I, I2, I, I2, M) < 1e-12
