"""Cross-module and closed-form oracle cases."""

import cmath
import itertools
import math

import numpy as np
import pytest

from conftest import crandn
from tensorspectra import algebra as alg
from tensorspectra import special as sp
from tensorspectra.decomp import TuckerTriple, givens_orthonormal, total_orthogonality_residual, tucker_core, tucker_reconstruct
from tensorspectra.groebner import matrix_char_ideal, parse_poly, poly_reduce, tensor3_char_ideal
from tensorspectra.scalar import conj_p, to_polar
from tensorspectra.spectral import (
    SolveConfig,
    SpectralCandidate3,
    matrix_spectral_oracle,
    outer_reconstruct,
    planted_instance,
    scaled_factors,
    solve_spectral3,
    spectral_residual3,
)
from tensorspectra.tensor import DenseTensor, as_array, max_abs


def test_polar_of_one_plus_i():
    p = to_polar(1 + 1j)
    assert abs(p.modulus - math.sqrt(2)) < 1e-15 and abs(p.angle - math.pi / 4) < 1e-15


def test_conj_closed_form():
    mod = math.sqrt(2) * math.exp(-(math.pi / 4) * math.sin(2 * math.pi / 3))
    ang = (math.pi / 4) * math.cos(2 * math.pi / 3)
    assert abs(conj_p(1 + 1j, 3, 1) - cmath.rect(mod, ang)) < 1e-15


def test_nary_all_ones_order4():
    for l in (2, 3):
        out = as_array(alg.nary_product([np.ones((l,) * 4)] * 4))
        assert np.all(out == l)


def test_norm_closed_forms():
    assert abs(alg.lp_norm(np.ones(3), 3) - 3 ** (1 / 3)) < 1e-15
    for l in (2, 3, 4):
        assert abs(alg.lp_norm(sp.kronecker(3, l), 3) - l ** (1 / 3)) < 1e-15


def test_witness_of_kronecker():
    assert alg.hermitian_norm_witness(sp.kronecker(3, 2)) == 2


def test_identity_tensor_from_all_ones_product():
    for l in (2, 3):
        built = alg.ternary_product(np.ones((l,) * 3), np.ones((l,) * 3), sp.kronecker(3, l))
        assert built.equals(sp.identity_family(l)[0])


def test_two_cycle_swaps_depth_slices(rng):
    A = crandn(rng, (2, 2, 2))
    P = sp.permutation_tensor((2, 1))
    got = as_array(sp.conjugate_slices(A, P, "depth"))
    assert np.array_equal(got, A[:, :, ::-1])


@pytest.mark.parametrize("sigma", list(itertools.permutations((1, 2, 3))))
def test_permutation_tensors_are_first_orthogonal(sigma):
    assert sp.orthogonality_residuals(sp.permutation_tensor(sigma))[0] == 0.0


def test_diagonal_residual_positive_on_dense(rng):
    assert sp.diagonal_residual(rng.uniform(0.5, 1.0, size=(3, 3, 3))) > 0


def test_kronecker_candidate_on_kronecker():
    delta = as_array(sp.kronecker(3, 2))
    c = SpectralCandidate3(*(DenseTensor(delta) for _ in range(3)), *(np.ones((2, 2)) for _ in range(3)))
    assert spectral_residual3(delta, c) == (0.0, 0.0)


def test_outer_reconstruct_matches_ternary_route(rng):
    from tensorspectra.tensor import adjoint_k

    q, r, s = (rng.uniform(0, 1, size=(3, 3, 3)) for _ in range(3))
    via_product = alg.ternary_product(q, adjoint_k(r, 2), adjoint_k(s, 1))
    assert outer_reconstruct(q, r, s).max_abs_diff(via_product) < 1e-12


def test_division_by_linear():
    reg = ("x",)
    assert poly_reduce(parse_poly("x^2 - 1", reg), [parse_poly("x - 1", reg)]).is_zero()


def test_matrix_ideal_vanishes_at_oracle_solution():
    A = [[2, 1], [1, 2]]
    r = matrix_spectral_oracle(np.array(A, dtype=float))
    gens = matrix_char_ideal(A)
    values = {}
    for k in range(2):
        values[f"l{k + 1}"] = float(r.eigenvalues[k])
        for m in range(2):
            values[f"q{k + 1}{m + 1}"] = float(np.real(r.Q[k, m]))
            values[f"r{k + 1}{m + 1}"] = float(np.real(r.R[k, m]))
    assert max(abs(float(g.evaluate(values))) for g in gens) < 1e-9


def test_tensor3_ideal_vanishes_at_planted_solution():
    A, c = planted_instance(2, np.random.default_rng(566))
    rep = solve_spectral3(A, SolveConfig(seed=0))
    assert rep.converged
    gens = tensor3_char_ideal(as_array(A).real)
    reg = gens[0].registry
    cand = rep.candidate
    blocks = {"q": cand.Q, "r": cand.R, "s": cand.S, "mu": cand.Mu, "nu": cand.Nu, "xi": cand.Xi}
    values = {}
    for name in reg:
        prefix = name.rstrip("0123456789")
        idx = tuple(int(ch) - 1 for ch in name[len(prefix):])
        values[name] = float(np.real(as_array(blocks[prefix])[idx]))
    assert max(abs(float(g.evaluate(values))) for g in gens) < 1e-6


def test_tucker_of_rank1_stays_rank1(rng):
    u, v, w = rng.normal(size=3), rng.normal(size=3), rng.normal(size=3)
    D = np.einsum("i,j,k->ijk", u, v, w)
    t = TuckerTriple(*(givens_orthonormal(3, rng) for _ in range(3)))
    core = as_array(tucker_core(D, t))
    ref = np.einsum("i,j,k->ijk", t.Q.T @ u, t.S.T @ v, t.U.T @ w)
    assert max_abs(core - ref) < 1e-10
    assert max_abs(as_array(tucker_reconstruct(core, t)) - D) < 1e-10


def test_total_orthogonality_brute_force(rng):
    T = rng.normal(size=(2, 3, 2))
    worst = 0.0
    for axis in range(3):
        n = T.shape[axis]
        for a in range(n):
            for b in range(n):
                if a != b:
                    sa, sb = np.take(T, a, axis=axis), np.take(T, b, axis=axis)
                    worst = max(worst, abs(float(np.sum(sa * sb))))
    assert worst > 0
    assert abs(total_orthogonality_residual(T) - worst) < 1e-12
