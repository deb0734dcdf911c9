"""Kronecker, identity, permutation, scaling, diagonal and orthogonal tensors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import nary_product, ternary_product
from .errors import NotSymmetricError, ShapeError
from .tensor import DenseTensor, adjoint_k, as_array, max_abs, transpose_k

__all__ = [
    "kronecker",
    "ones",
    "identity_family",
    "check_permutation",
    "permutation_tensor",
    "transposition_sequence",
    "conjugate_slices",
    "slice_permute",
    "ScalingFamily",
    "scaling_family",
    "apply_scaling",
    "diagonal_from_weights",
    "diagonal_residual",
    "orthogonality_residuals",
    "inverse_pair_residual",
    "first_orthogonal_sample",
]

AXES = {"row": 1, "column": 2, "depth": 3}


def kronecker(n: int, l: int) -> DenseTensor:
    """Order-n Kronecker tensor of side l: 1 where all indices agree."""
    if n < 2 or l < 1:
        raise ValueError(f"need n >= 2 and l >= 1, got n={n}, l={l}")
    out = np.zeros((l,) * n, dtype=np.complex128)
    idx = np.arange(l)
    out[(idx,) * n] = 1.0
    return DenseTensor._wrap(out)


def ones(l: int, n: int = 3) -> DenseTensor:
    return DenseTensor.ones((l,) * n)


def identity_family(l: int) -> tuple[DenseTensor, DenseTensor, DenseTensor]:
    """(I, I^T, I^T2) with I[m,n,p] = delta(n,p)."""
    if l < 1:
        raise ValueError(f"need l >= 1, got {l}")
    eye = np.eye(l, dtype=np.complex128)
    identity = DenseTensor._wrap(np.broadcast_to(eye[None, :, :], (l, l, l)).copy())
    return identity, transpose_k(identity, 1), transpose_k(identity, 2)


def check_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    """Validate a 1-based permutation in one-line notation."""
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{list(sigma)} is not a permutation of 1..{len(sigma)}")
    return sigma


def permutation_tensor(sigma: Sequence[int]) -> DenseTensor:
    """P[m,n,p] = delta(p, sigma(n)), the product o(1, 1, sum_k e_k e_k e_sigma(k))."""
    sigma = check_permutation(sigma)
    l = len(sigma)
    out = np.zeros((l, l, l), dtype=np.complex128)
    for n, s in enumerate(sigma):
        out[:, n, s - 1] = 1.0
    return DenseTensor._wrap(out)


def transposition_sequence(sigma: Sequence[int]) -> list[tuple[int, int]]:
    """Transpositions t1, ..., tk (1-based) with sigma = tk o ... o t1."""
    sigma = check_permutation(sigma)
    seen = [False] * len(sigma)
    out = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        j = sigma[start] - 1
        while j != start:
            cycle.append(j)
            seen[j] = True
            j = sigma[j] - 1
        # (c1 c2 ... cr) = (c1 cr) o ... o (c1 c3) o (c1 c2)
        for c in cycle[1:]:
            out.append((cycle[0] + 1, c + 1))
    return out


def _axis_number(axis) -> int:
    if isinstance(axis, str):
        if axis not in AXES:
            raise ValueError(f"axis must be one of {sorted(AXES)}, got {axis!r}")
        return AXES[axis]
    axis = int(axis)
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis}")
    return axis


def conjugate_slices(A, P, axis="depth") -> DenseTensor:
    """One conjugation of A by the tensor P along the given axis.

    depth: o(P, A, P^T2);  row: o(P^T, P^T2, A);  column: o(A, P, P^T).

    With P a permutation tensor this permutes slices only when the
    permutation is an involution; :func:`slice_permute` handles the rest.
    """
    axis = _axis_number(axis)
    p1, p2 = transpose_k(P, 1), transpose_k(P, 2)
    if axis == 3:
        return ternary_product(P, A, p2)
    if axis == 1:
        return ternary_product(p1, p2, A)
    return ternary_product(A, P, p1)


def slice_permute(A, sigma: Sequence[int], axis="depth") -> DenseTensor:
    """Move slice k of A along ``axis`` to position sigma(k).

    sigma is split into transpositions and each one is applied as a
    conjugation by its permutation tensor, innermost first.
    """
    a = as_array(A)
    if a.ndim != 3 or len(set(a.shape)) != 1:
        raise ShapeError(f"slice permutation needs a cubic order-3 tensor, got {a.shape}")
    sigma = check_permutation(sigma)
    axis = _axis_number(axis)
    if len(sigma) != a.shape[0]:
        raise ShapeError(f"permutation of length {len(sigma)} for side {a.shape[0]}")
    out = DenseTensor._wrap(a.copy())
    l = len(sigma)
    for i, j in transposition_sequence(sigma):
        tau = list(range(1, l + 1))
        tau[i - 1], tau[j - 1] = j, i
        out = conjugate_slices(out, permutation_tensor(tau), axis)
    return out


@dataclass(frozen=True)
class ScalingFamily:
    """Scaling tensors S^(1..n-1) of order n built from a symmetric matrix W.

    Multiplying A by the family scales a[i1..in] by prod_{j != 2} w[i2, ij].
    """

    W: np.ndarray
    order: int
    members: tuple[DenseTensor, ...]

    def cube_triple(self) -> tuple[DenseTensor, DenseTensor, DenseTensor]:
        """Order-3 triple (a, b, c) with a = c^T = b^T2 and o(a, b, c) = w^3 [m = p].

        a[m,n,p] = delta(m,p) w[p,n],  b[m,n,p] = delta(n,p) w[m,p],
        c[m,n,p] = delta(m,n) w[p,m].
        """
        if self.order != 3:
            raise ValueError("the cube triple exists for order 3 only")
        w = np.asarray(self.W, dtype=np.complex128)
        l = w.shape[0]
        eye = np.eye(l)
        a = np.einsum("mp,pn->mnp", eye, w)
        b = np.einsum("np,mp->mnp", eye, w)
        c = np.einsum("mn,pm->mnp", eye, w)
        return DenseTensor._wrap(a), DenseTensor._wrap(b), DenseTensor._wrap(c)


def scaling_family(W, n: int = 3) -> ScalingFamily:
    """Build the n-1 scaling tensors for the symmetric matrix W.

    S^(1)   = delta(i2, i3) w[i3, i1]
    S^(t)   = delta(i2, i(t+2)) w[i(t+2), i(t+1)]    for 2 <= t <= n-2
    S^(n-1) = delta(i1, i2) w[i1, in]

    For n = 3 these are b[m,n,p] = delta(n,p) w[p,m] and c = delta(m,n) w[m,p].
    With W all ones they reduce to the identity pattern.
    """
    w = np.array(W, dtype=np.complex128)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ShapeError(f"W must be square, got shape {w.shape}")
    if not np.array_equal(w, w.T):
        raise NotSymmetricError("scaling matrix W must be exactly symmetric")
    n = int(n)
    if n < 3:
        raise ValueError(f"scaling families need order n >= 3, got {n}")
    l = w.shape[0]
    grids = np.indices((l,) * n, sparse=True)
    members = []
    for t in range(1, n):
        if t == n - 1:
            a, b = 0, 1  # delta(i1, i2) w[i1, in]
            s = (grids[a] == grids[b]) * w[grids[0], grids[n - 1]]
        else:
            hi = t + 1  # 0-based position of i(t+2)
            lo = 0 if t == 1 else t  # position of i1 or i(t+1)
            s = (grids[1] == grids[hi]) * w[grids[hi], grids[lo]]
        members.append(DenseTensor._wrap(np.broadcast_to(s, (l,) * n).astype(np.complex128)))
    w.flags.writeable = False
    return ScalingFamily(w, n, tuple(members))


def apply_scaling(A, family: ScalingFamily) -> DenseTensor:
    """The product o(A, S^(1), ..., S^(n-1))."""
    return nary_product([A, *family.members])


def diagonal_from_weights(W) -> DenseTensor:
    """D[m,n,p] = w[m,n] delta(n,p) for a symmetric W."""
    w = np.asarray(W, dtype=np.complex128)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ShapeError(f"W must be square, got shape {w.shape}")
    if not np.array_equal(w, w.T):
        raise NotSymmetricError("diagonal tensors need an exactly symmetric W")
    l = w.shape[0]
    return DenseTensor._wrap(np.einsum("mn,np->mnp", w, np.eye(l)))


def diagonal_residual(D) -> float:
    """max |o(D^T, D^T2, D) - D**3|; zero for diagonal tensors."""
    d = as_array(D)
    if d.ndim != 3 or len(set(d.shape)) != 1:
        raise ShapeError(f"diagonality needs a cubic order-3 tensor, got {d.shape}")
    prod = ternary_product(transpose_k(d, 1), transpose_k(d, 2), d)
    return max_abs(as_array(prod) - d ** 3)


def orthogonality_residuals(Q) -> tuple[float, float]:
    """Residuals of the first orthogonality equation and of Kronecker invariance.

    first       = |o(Q, Q^+2, Q^+) - Delta|
    kronecker   = |o(o(Q, o(Q^+, Q^+2, Delta), Q^+2), Q, Q^+) - Delta|
    """
    q = as_array(Q)
    if q.ndim != 3 or len(set(q.shape)) != 1:
        raise ShapeError(f"orthogonality needs a cubic order-3 tensor, got {q.shape}")
    delta = as_array(kronecker(3, q.shape[0]))
    q1, q2 = adjoint_k(q, 1), adjoint_k(q, 2)
    first = max_abs(as_array(ternary_product(q, q2, q1)) - delta)
    inner = ternary_product(q1, q2, delta)
    outer = ternary_product(ternary_product(q, inner, q2), q, q1)
    return first, max_abs(as_array(outer) - delta)


def inverse_pair_residual(B1, B2, A1, A2, M) -> float:
    """max |o(B1, o(A1, M, A2), B2) - M|."""
    inner = ternary_product(A1, M, A2)
    out = ternary_product(B1, inner, B2)
    m = as_array(M)
    if out.shape != m.shape:
        raise ShapeError(f"result shape {out.shape} differs from M {m.shape}")
    return max_abs(as_array(out) - m)


def first_orthogonal_sample(l: int, rng: np.random.Generator) -> DenseTensor:
    """Random nonnegative Q with Q[m,k,p] = delta(m,p) x[m,k], sum_k x[m,k]^3 = 1.

    Every such Q solves the first orthogonality equation exactly.
    """
    x = rng.uniform(0.1, 1.0, size=(l, l))
    x /= np.cbrt(np.sum(x ** 3, axis=1, keepdims=True))
    return DenseTensor._wrap(np.einsum("mp,mk->mkp", np.eye(l), x))
