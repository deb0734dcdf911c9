import numpy as np
import pytest

from conftest import crandn, naive_ternary
from tensorspectra import _kernels_py, kernels
from tensorspectra.spectral import candidate_size, planted_instance
from tensorspectra.tensor import as_array

compiled = pytest.importorskip("tensorspectra._kernels", reason="compiled extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("compiled", "python")


@pytest.mark.parametrize("impl", [_kernels_py, compiled])
def test_ternary_matches_naive(impl, rng):
    A, B, C = crandn(rng, (2, 3, 4)), crandn(rng, (2, 5, 3)), crandn(rng, (3, 5, 4))
    got = impl.ternary_product(A, B, C)
    assert np.max(np.abs(got - naive_ternary(A, B, C))) < 1e-12


def test_backends_agree_on_product(rng):
    A, B, C = (crandn(rng, (4, 4, 4)) for _ in range(3))
    a = compiled.ternary_product(A, B, C)
    b = _kernels_py.ternary_product(A, B, C)
    assert np.max(np.abs(a - b)) < 1e-13


def test_backends_agree_on_residual_and_jacobian():
    rng = np.random.default_rng(1)
    A, _ = planted_instance(2, rng)
    a = np.ascontiguousarray(as_array(A).real)
    x = rng.uniform(0, 1, size=candidate_size(2))
    r1 = compiled.spectral_residual_vec(x, a, 2)
    r2 = _kernels_py.spectral_residual_vec(x, a, 2)
    assert np.max(np.abs(r1 - r2)) < 1e-13
    b1, J1 = compiled.spectral_jacobian_fd(x, a, 2, 1e-7)
    b2, J2 = _kernels_py.spectral_jacobian_fd(x, a, 2, 1e-7)
    assert np.max(np.abs(b1 - b2)) < 1e-13
    assert np.max(np.abs(J1 - J2)) < 1e-6
