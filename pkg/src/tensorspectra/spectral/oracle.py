"""Constructive spectral solution of the matrix system from a classical eigensolver."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EigenSolverError, NotHermitianError, ShapeError
from ..scalar import conj_p_array
from ..tensor import as_array, max_abs
from .solver import check_norm

__all__ = ["MatrixSpectrum", "matrix_residuals", "matrix_spectral_oracle"]


@dataclass(frozen=True)
class MatrixSpectrum:
    """Q, R (eigenvectors as rows), scalings mu, nu and the eigenvalues."""

    Q: np.ndarray
    R: np.ndarray
    Mu: np.ndarray
    Nu: np.ndarray
    eigenvalues: np.ndarray
    residual_a: float
    residual_delta: float


def matrix_residuals(A, Q, R, Mu, Nu) -> tuple[float, float]:
    """Max-norm residuals of

        a[m,n] = sum_k (mu_k q[k,m])^{c_2^1} (nu_k r[k,n])
        delta[m,n] = sum_k q[k,m]^{c_2^1} r[k,n]
    """
    a = as_array(A)
    q, r = as_array(Q), as_array(R)
    mu, nu = as_array(Mu).ravel(), as_array(Nu).ravel()
    left = conj_p_array(mu[:, None] * q, 2, 1)
    right = nu[:, None] * r
    res_a = max_abs(left.T @ right - a)
    res_d = max_abs(conj_p_array(q, 2, 1).T @ r - np.eye(a.shape[0]))
    return res_a, res_d


def matrix_spectral_oracle(A) -> MatrixSpectrum:
    """Solve the matrix spectral system of a hermitian matrix.

    With A = V diag(lam) V^H the rows of Q and R are the conjugated
    eigenvectors, nu_k is the principal square root of lam_k and mu_k its
    conjugate, so that conj(mu_k) * nu_k = lam_k also for negative lam_k.
    """
    a = as_array(A)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"the matrix oracle needs a square matrix, got {a.shape}")
    scale = max(1.0, max_abs(a))
    if max_abs(a - a.conj().T) > 1e-12 * scale:
        raise NotHermitianError("the matrix oracle needs a hermitian matrix")
    check_norm(a, 2)
    try:
        lam, V = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(str(exc)) from exc
    Q = V.conj().T.copy()
    R = Q.copy()
    nu = np.sqrt(lam.astype(np.complex128))
    mu = np.conj(nu)
    res_a, res_d = matrix_residuals(a, Q, R, mu, nu)
    return MatrixSpectrum(Q, R, mu, nu, lam, res_a, res_d)
