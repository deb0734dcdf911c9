"""The coupled spectral system of a cubic 3-tensor, as residual maps.

Unknowns are three l*l*l factor tensors Q, R, S and three l*l scaling
matrices mu, nu, xi.  The system reads

    a[m,n,p] = sum_k (mu[m,k] q[m,k,p] mu[k,p])
                     * (nu[n,k] r[n,k,m] nu[k,m])^{c_3^2}
                     * (xi[p,k] s[p,k,n] xi[k,n])^{c_3^1}
    delta[m,n,p] = sum_k q[m,k,p] * r[n,k,m]^{c_3^2} * s[p,k,n]^{c_3^1}

which is o(Q~, R~^+2, S~^+) = A and o(Q, R^+2, S^+) = Delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..algebra import lp_norm, nary_product, outer_product
from ..errors import ShapeError
from ..scalar import conj_p_array
from ..special import kronecker
from ..tensor import DenseTensor, adjoint_k, as_array, max_abs

__all__ = [
    "SpectralCandidate3",
    "candidate_size",
    "spectral_residual3",
    "scaled_factors",
    "eigen_matrices",
    "outer_reconstruct",
    "spectral_residual_n",
    "planted_instance",
    "hermitian_generator",
]


@dataclass(frozen=True)
class SpectralCandidate3:
    """Factor tensors and scaling matrices of one candidate solution."""

    Q: DenseTensor
    R: DenseTensor
    S: DenseTensor
    Mu: np.ndarray
    Nu: np.ndarray
    Xi: np.ndarray

    def __post_init__(self) -> None:
        sides = set()
        for name in ("Q", "R", "S"):
            shape = getattr(self, name).shape
            if len(shape) != 3 or len(set(shape)) != 1:
                raise ShapeError(f"{name} must be cubic of order 3, got {shape}")
            sides.add(shape[0])
        for name in ("Mu", "Nu", "Xi"):
            shape = np.shape(getattr(self, name))
            if len(shape) != 2 or shape[0] != shape[1]:
                raise ShapeError(f"{name} must be square, got {shape}")
            sides.add(shape[0])
        if len(sides) != 1:
            raise ShapeError(f"all blocks must share one side, got sides {sorted(sides)}")

    @property
    def side(self) -> int:
        return self.Q.shape[0]

    @property
    def is_real(self) -> bool:
        return all(
            not np.any(np.imag(np.asarray(x)))
            for x in (self.Q, self.R, self.S, self.Mu, self.Nu, self.Xi)
        )

    def to_vector(self) -> np.ndarray:
        """Flatten a real candidate to [Q, R, S, Mu, Nu, Xi] (row-major)."""
        if not self.is_real:
            raise ValueError("only real candidates have a vector form")
        parts = [np.real(np.asarray(x)).ravel() for x in (self.Q, self.R, self.S)]
        parts += [np.real(np.asarray(x, dtype=np.complex128)).ravel() for x in (self.Mu, self.Nu, self.Xi)]
        return np.concatenate(parts)

    @classmethod
    def from_vector(cls, x: np.ndarray, l: int) -> "SpectralCandidate3":
        x = np.asarray(x, dtype=np.float64)
        if x.size != candidate_size(l):
            raise ShapeError(f"vector of length {x.size} does not fit side {l}")
        l3, l2 = l ** 3, l * l
        blocks = [x[i * l3:(i + 1) * l3].reshape(l, l, l) for i in range(3)]
        off = 3 * l3
        mats = [x[off + i * l2:off + (i + 1) * l2].reshape(l, l).copy() for i in range(3)]
        return cls(*(DenseTensor(b) for b in blocks), *mats)


def candidate_size(l: int) -> int:
    return 3 * l ** 3 + 3 * l * l


def _scale(X, M) -> np.ndarray:
    m = np.asarray(M, dtype=np.complex128)
    return m[:, :, None] * as_array(X) * m[None, :, :]


def scaled_factors(c: SpectralCandidate3) -> tuple[DenseTensor, DenseTensor, DenseTensor]:
    """Q~[m,k,p] = mu[m,k] q[m,k,p] mu[k,p], and likewise for R~, S~."""
    return (
        DenseTensor._wrap(_scale(c.Q, c.Mu)),
        DenseTensor._wrap(_scale(c.R, c.Nu)),
        DenseTensor._wrap(_scale(c.S, c.Xi)),
    )


def eigen_matrices(Qt) -> list[np.ndarray]:
    """Middle-index slices Q~[:, k, :] in index order."""
    q = as_array(Qt)
    return [q[:, k, :].copy() for k in range(q.shape[1])]


def _block(q: np.ndarray, r: np.ndarray, s: np.ndarray) -> np.ndarray:
    rc = conj_p_array(r, 3, 2)
    sc = conj_p_array(s, 3, 1)
    return np.einsum("mkp,nkm,pkn->mnp", q, rc, sc)


def spectral_residual3(A, c: SpectralCandidate3) -> tuple[float, float]:
    """Max-norm residuals of the factorization block and the orthogonality block."""
    a = as_array(A)
    if a.shape != (c.side,) * 3:
        raise ShapeError(f"tensor shape {a.shape} does not match candidate side {c.side}")
    qt, rt, st = (as_array(x) for x in scaled_factors(c))
    res_a = max_abs(_block(qt, rt, st) - a)
    delta = as_array(kronecker(3, c.side))
    res_d = max_abs(_block(as_array(c.Q), as_array(c.R), as_array(c.S)) - delta)
    return res_a, res_d


def outer_reconstruct(Qt, Rt, St) -> DenseTensor:
    """sum_k of the outer product of the k-th components of Q~, R~^+2, S~^+."""
    q, r, s = as_array(Qt), as_array(Rt), as_array(St)
    if not (q.shape == r.shape == s.shape) or q.ndim != 3 or len(set(q.shape)) != 1:
        raise ShapeError(f"factors must share one cubic shape, got {q.shape}, {r.shape}, {s.shape}")
    r2 = as_array(adjoint_k(r, 2))
    s1 = as_array(adjoint_k(s, 1))
    out = np.zeros(q.shape, dtype=np.complex128)
    for k in range(q.shape[1]):
        term = outer_product([q[:, k:k + 1, :], r2[:, :, k:k + 1], s1[k:k + 1, :, :]])
        out += as_array(term)
    return DenseTensor._wrap(out)


def spectral_residual_n(A, scaled: Sequence, factors: Sequence) -> tuple[float, float]:
    """Residuals of the order-n system A = O_t Q~_t^{+(n+1-t)}, Delta = O_t Q_t^{+(n+1-t)}."""
    a = as_array(A)
    n = a.ndim
    if len(scaled) != n or len(factors) != n:
        raise ShapeError(f"an order-{n} system needs {n} scaled and {n} plain factors")

    def product(xs):
        return nary_product([adjoint_k(x, n + 1 - t) for t, x in enumerate(xs, start=1)])

    delta = as_array(kronecker(n, a.shape[0]))
    res_a = max_abs(as_array(product(scaled)) - a)
    res_d = max_abs(as_array(product(factors)) - delta)
    return res_a, res_d


def _unit_rows(rng: np.random.Generator, l: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # x, y, z > 0 with sum_k x[m,k] y[m,k] z[m,k] = 1 for every m
    x, y, z = (rng.uniform(0.2, 1.0, size=(l, l)) for _ in range(3))
    scale = np.cbrt(np.sum(x * y * z, axis=1, keepdims=True))
    return x / scale, y / scale, z / scale


def planted_instance(l: int, rng: np.random.Generator) -> tuple[DenseTensor, SpectralCandidate3]:
    """A nonnegative candidate and the tensor it generates.

    Q[m,k,p] = delta(m,p) x[m,k], R[n,k,m] = delta(n,m) y[n,k],
    S[p,k,n] = delta(p,n) z[p,k] with sum_k x y z = 1 row by row, so the
    orthogonality block holds exactly; scalings are uniform on [0.5, 1.5].
    The tensor is redrawn if its l3 norm lies within 1e-6 of 1.
    """
    eye = np.eye(l)
    while True:
        x, y, z = _unit_rows(rng, l)
        mats = [rng.uniform(0.5, 1.5, size=(l, l)) for _ in range(3)]
        c = SpectralCandidate3(
            DenseTensor(np.einsum("mp,mk->mkp", eye, x)),
            DenseTensor(np.einsum("nm,nk->nkm", eye, y)),
            DenseTensor(np.einsum("pn,pk->pkn", eye, z)),
            *mats,
        )
        qt, rt, st = (as_array(t) for t in scaled_factors(c))
        A = DenseTensor._wrap(_block(qt, rt, st).real.astype(np.complex128))
        if abs(lp_norm(A, 3) - 1.0) > 1e-6:
            return A, c


def hermitian_generator(l: int, seed: int) -> DenseTensor:
    """Random nonnegative tensor that is constant on cyclic index orbits.

    Such tensors are fixed by every cyclic transpose and, being nonnegative
    real, by every order-3 conjugate, so they are exactly hermitian.
    """
    if l < 1:
        raise ValueError(f"need l >= 1, got {l}")
    rng = np.random.default_rng(seed)
    out = np.zeros((l, l, l))
    for i in range(l):
        for j in range(l):
            for k in range(l):
                orbit = sorted({(i, j, k), (k, i, j), (j, k, i)})
                if (i, j, k) == orbit[0]:
                    v = rng.uniform(0.0, 1.0)
                    for idx in orbit:
                        out[idx] = v
    norm = float(np.sum(out ** 3)) ** (1.0 / 3.0)
    if abs(norm - 1.0) <= 1e-6:
        out *= 2.0
    return DenseTensor(out)
