"""Tucker reconstruction, total orthogonality and the rank-1 fitting objective."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import bg_matrix_product, lp_norm, ternary_product
from .errors import OrthonormalityError, ShapeError
from .tensor import DenseTensor, as_array

__all__ = [
    "TuckerTriple",
    "givens_orthonormal",
    "tucker_core",
    "tucker_reconstruct",
    "total_orthogonality_residual",
    "stack_rank1_factors",
    "rank1_objective",
]

ORTHO_TOL = 1e-10


def _orthonormal(name: str, m) -> np.ndarray:
    a = np.asarray(m)
    if np.iscomplexobj(a):
        if np.any(a.imag):
            raise OrthonormalityError(f"{name} must be real")
        a = a.real
    a = np.array(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"{name} must be a square matrix, got {a.shape}")
    dev = float(np.max(np.abs(a.T @ a - np.eye(a.shape[0]))))
    if dev > ORTHO_TOL:
        raise OrthonormalityError(f"{name} has orthonormality defect {dev:.3e}")
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class TuckerTriple:
    """Orthonormal mode matrices Q, S, U (checked to 1e-10)."""

    Q: np.ndarray
    S: np.ndarray
    U: np.ndarray

    def __post_init__(self) -> None:
        for name in ("Q", "S", "U"):
            object.__setattr__(self, name, _orthonormal(name, getattr(self, name)))

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.Q.shape[0], self.S.shape[0], self.U.shape[0]

    @classmethod
    def identity(cls, n1: int, n2: int, n3: int) -> "TuckerTriple":
        return cls(np.eye(n1), np.eye(n2), np.eye(n3))


def givens_orthonormal(n: int, rng: np.random.Generator, rotations: int | None = None) -> np.ndarray:
    """Product of random Givens rotations (orthonormal to rounding)."""
    out = np.eye(n)
    if n < 2:
        return out
    for _ in range(rotations if rotations is not None else 2 * n * n):
        i, j = sorted(rng.choice(n, size=2, replace=False))
        theta = rng.uniform(-np.pi, np.pi)
        c, s = np.cos(theta), np.sin(theta)
        ri, rj = out[i].copy(), out[j].copy()
        out[i] = c * ri - s * rj
        out[j] = s * ri + c * rj
    return out


def _check_sides(D, t: TuckerTriple) -> np.ndarray:
    d = as_array(D)
    if d.ndim != 3 or d.shape != t.shape:
        raise ShapeError(f"tensor shape {d.shape} does not match mode sizes {t.shape}")
    return d


def tucker_core(D, t: TuckerTriple) -> DenseTensor:
    """t[y,r,v] = sum_{i,j,k} q[i,y] s[j,r] u[k,v] d[i,j,k]."""
    d = _check_sides(D, t)
    return bg_matrix_product(t.Q.T, t.S.T, t.U, d)


def tucker_reconstruct(T, t: TuckerTriple) -> DenseTensor:
    """d[i,j,k] = sum_{y,r,v} q[i,y] s[j,r] u[k,v] t[y,r,v]."""
    core = _check_sides(T, t)
    return bg_matrix_product(t.Q, t.S, t.U.T, core)


def total_orthogonality_residual(T) -> float:
    """Largest off-diagonal Gram entry among the slices of each mode.

    For every mode the slices T_alpha must satisfy sum T_alpha * T_beta = 0
    when alpha != beta; the diagonal (slice norms) is unconstrained.
    """
    t = as_array(T)
    if t.ndim != 3:
        raise ShapeError(f"total orthogonality needs an order-3 tensor, got {t.shape}")
    worst = 0.0
    for axis in range(3):
        slices = np.moveaxis(t, axis, 0).reshape(t.shape[axis], -1)
        gram = slices @ slices.T
        off = gram - np.diag(np.diag(gram))
        worst = max(worst, float(np.max(np.abs(off))) if off.size else 0.0)
    return worst


def _expand_factor(f, shape) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n1, n2, n3 = shape
    m, n, p = (as_array(x) for x in f)
    if m.ndim == 1 and n.ndim == 1 and p.ndim == 1:
        if (m.size, n.size, p.size) != (n1, n2, n3):
            raise ShapeError(f"vector lengths {(m.size, n.size, p.size)} do not match {shape}")
        # replicated slices: m[i,k] = u_i, n[i,j] = v_j, p[j,k] = w_k
        return (
            np.broadcast_to(m[:, None], (n1, n3)),
            np.broadcast_to(n[None, :], (n1, n2)),
            np.broadcast_to(p[None, :], (n2, n3)),
        )
    if (m.shape, n.shape, p.shape) != ((n1, n3), (n1, n2), (n2, n3)):
        raise ShapeError(
            f"slice shapes {(m.shape, n.shape, p.shape)} do not match "
            f"{((n1, n3), (n1, n2), (n2, n3))}"
        )
    return m, n, p


def stack_rank1_factors(factors: Sequence, lambdas: Sequence[float], shape) -> tuple[np.ndarray, ...]:
    """Stack lambda-scaled slices into M (n1*r*n3), N (n1*n2*r), P (r*n2*n3)."""
    if len(factors) != len(lambdas):
        raise ShapeError(f"{len(factors)} factors but {len(lambdas)} weights")
    n1, n2, n3 = shape
    r = len(factors)
    M = np.zeros((n1, r, n3), dtype=np.complex128)
    N = np.zeros((n1, n2, r), dtype=np.complex128)
    P = np.zeros((r, n2, n3), dtype=np.complex128)
    for k, (f, lam) in enumerate(zip(factors, lambdas)):
        m, n, p = _expand_factor(f, shape)
        M[:, k, :] = lam * m
        N[:, :, k] = lam * n
        P[k, :, :] = lam * p
    return M, N, P


def rank1_objective(factors: Sequence, lambdas: Sequence[float], A) -> float:
    """l3 distance between A and o(M, N, P) built from lambda-scaled slices.

    Each factor is a triple of vectors (u, v, w) or of slices; with vectors
    this is || sum_k lambda_k^3 u_k (x) v_k (x) w_k - A ||_3.
    """
    a = as_array(A)
    if a.ndim != 3:
        raise ShapeError(f"the rank-1 objective needs an order-3 tensor, got {a.shape}")
    if len(factors) == 0:
        return lp_norm(a, 3)
    M, N, P = stack_rank1_factors(factors, lambdas, a.shape)
    approx = as_array(ternary_product(M, N, P))
    return lp_norm(approx - a, 3)
