"""Pure numpy implementations of the hot kernels.

Same signatures and summation order as the compiled ``_kernels`` module; used
when the extension is not built or ``TENSORSPECTRA_PURE_PYTHON`` is set.
"""

import numpy as np


def ternary_product(A, B, C):
    """d[i,j,k] = sum_t a[i,t,k] * b[i,j,t] * c[t,j,k], t summed in index order."""
    A = np.ascontiguousarray(A, dtype=np.complex128)
    B = np.ascontiguousarray(B, dtype=np.complex128)
    C = np.ascontiguousarray(C, dtype=np.complex128)
    m, l, p = A.shape
    n = B.shape[1]
    out = np.zeros((m, n, p), dtype=np.complex128)
    for t in range(l):
        out += (A[:, t, :][:, None, :] * B[:, :, t][:, :, None]) * C[t][None, :, :]
    return out


def _split(X, l):
    l3 = l ** 3
    l2 = l * l
    b = X.shape[0]
    Q = X[:, :l3].reshape(b, l, l, l)
    R = X[:, l3:2 * l3].reshape(b, l, l, l)
    S = X[:, 2 * l3:3 * l3].reshape(b, l, l, l)
    off = 3 * l3
    Mu = X[:, off:off + l2].reshape(b, l, l)
    Nu = X[:, off + l2:off + 2 * l2].reshape(b, l, l)
    Xi = X[:, off + 2 * l2:off + 3 * l2].reshape(b, l, l)
    return Q, R, S, Mu, Nu, Xi


def _residual_batch(X, A, l):
    Q, R, S, Mu, Nu, Xi = _split(X, l)
    # scaled factors: Qt[m,k,p] = mu[m,k] q[m,k,p] mu[k,p], same pattern for R, S
    Qt = Mu[:, :, :, None] * Q * Mu[:, None, :, :]
    Rt = Nu[:, :, :, None] * R * Nu[:, None, :, :]
    St = Xi[:, :, :, None] * S * Xi[:, None, :, :]
    ra = np.einsum("bmkp,bnkm,bpkn->bmnp", Qt, Rt, St) - A[None]
    rd = np.einsum("bmkp,bnkm,bpkn->bmnp", Q, R, S)
    idx = np.arange(l)
    rd[:, idx, idx, idx] -= 1.0
    return np.concatenate([ra.reshape(X.shape[0], -1), rd.reshape(X.shape[0], -1)], axis=1)


def spectral_residual_vec(x, A, l):
    """Residual vector [a-block, delta-block] of the real 3-tensor spectral system."""
    x = np.asarray(x, dtype=np.float64)
    A = np.asarray(A, dtype=np.float64)
    return _residual_batch(x[None, :], A, l)[0]


def spectral_jacobian_fd(x, A, l, h):
    """Forward-difference Jacobian with step h * max(1, |x_i|)."""
    x = np.asarray(x, dtype=np.float64)
    A = np.asarray(A, dtype=np.float64)
    nparam = x.size
    steps = h * np.maximum(1.0, np.abs(x))
    X = np.repeat(x[None, :], nparam + 1, axis=0)
    X[np.arange(1, nparam + 1), np.arange(nparam)] += steps
    res = _residual_batch(X, A, l)
    base = res[0]
    J = (res[1:] - base[None, :]) / steps[:, None]
    return base, np.ascontiguousarray(J.T)
