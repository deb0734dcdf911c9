import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def crandn(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def naive_ternary(A, B, C):
    A, B, C = (np.asarray(x) for x in (A, B, C))
    m, l, p = A.shape
    n = B.shape[1]
    D = np.zeros((m, n, p), dtype=complex)
    for i in range(m):
        for j in range(n):
            for k in range(p):
                D[i, j, k] = sum(A[i, t, k] * B[i, j, t] * C[t, j, k] for t in range(l))
    return D
