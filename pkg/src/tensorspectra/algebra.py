"""Products, actions, outer products, inner products and norms.

All products take operands in the order the index pattern expects and return
a :class:`~tensorspectra.tensor.DenseTensor`.  Summations run over the shared
index in increasing order so results do not depend on the backend's thread
count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .errors import ShapeError
from .scalar import conj_p_array
from .tensor import DenseTensor, _transpose_array, as_array

__all__ = [
    "ProductPlan",
    "plan_product",
    "ternary_product",
    "nary_product",
    "tensor_action",
    "outer_product",
    "bg_triple_dot",
    "bg_matrix_product",
    "inner_p",
    "lp_norm",
    "hermitian_norm_witness",
]


@dataclass(frozen=True)
class ProductPlan:
    """Validated shapes of an n-ary product."""

    operand_shapes: tuple[tuple[int, ...], ...]
    output_shape: tuple[int, ...]
    summed_dim: int


def _summed_axis(t: int, n: int) -> int:
    """0-based axis that carries the summation index in operand t (0-based)."""
    return (t + 1) % n


def plan_product(shapes: Sequence[Sequence[int]]) -> ProductPlan:
    """Check the chain and cross dimension constraints of an n-ary product.

    Operand t (1-based) carries the summed index at position t+1, the last
    operand at position 1.  The chain constraint requires all those summed
    dimensions to agree; the cross constraint requires every other position
    k of every operand to match the output size ``d(A^(k), k)``.
    """
    shapes = tuple(tuple(int(d) for d in s) for s in shapes)
    n = len(shapes)
    if n < 2:
        raise ShapeError("a product needs at least two operands")
    for t, s in enumerate(shapes, start=1):
        if len(s) != n:
            raise ShapeError(
                f"operand {t} has order {len(s)}; a {n}-ary product needs order-{n} operands"
            )
    summed = [shapes[t][_summed_axis(t, n)] for t in range(n)]
    if len(set(summed)) != 1:
        labels = ", ".join(
            f"d(A{t + 1},{_summed_axis(t, n) + 1})={d}" for t, d in enumerate(summed)
        )
        raise ShapeError(f"chain constraint violated: {labels} must all be equal")
    output = tuple(shapes[k][k] for k in range(n))
    for t, s in enumerate(shapes):
        for k in range(n):
            if k == _summed_axis(t, n):
                continue
            if s[k] != output[k]:
                raise ShapeError(
                    f"cross constraint violated: d(A{t + 1},{k + 1})={s[k]} "
                    f"but d(A{k + 1},{k + 1})={output[k]}"
                )
    return ProductPlan(shapes, output, summed[0])


def ternary_product(A, B, C) -> DenseTensor:
    """d[i,j,k] = sum_t a[i,t,k] b[i,j,t] c[t,j,k] for A m*l*p, B m*n*l, C l*n*p."""
    a, b, c = as_array(A), as_array(B), as_array(C)
    if a.ndim != 3 or b.ndim != 3 or c.ndim != 3:
        raise ShapeError("the ternary product takes three order-3 tensors")
    plan_product((a.shape, b.shape, c.shape))
    return DenseTensor._wrap(kernels.ternary_product(a, b, c))


def _nary_array(arrays: Sequence[np.ndarray]) -> np.ndarray:
    n = len(arrays)
    plan = plan_product([a.shape for a in arrays])
    out = np.zeros(plan.output_shape, dtype=np.complex128)
    for k in range(plan.summed_dim):
        term = None
        for t, a in enumerate(arrays):
            axis = _summed_axis(t, n)
            piece = np.expand_dims(np.take(a, k, axis=axis), axis)
            term = piece if term is None else term * piece
        out += term
    return out


def nary_product(operands: Sequence) -> DenseTensor:
    """The n-ary product of n order-n tensors.

    b[i1..in] = sum_k prod_{t<n} a^(t)[i1..it, k, i(t+2)..in] * a^(n)[k, i2..in]

    n = 2 is the matrix product and n = 3 the ternary product.
    """
    arrays = [as_array(x) for x in operands]
    if len(arrays) == 3 and all(a.ndim == 3 for a in arrays):
        return ternary_product(*arrays)
    return DenseTensor._wrap(_nary_array(arrays))


def _embed_leading(b: np.ndarray, order: int) -> np.ndarray:
    if b.ndim == order - 1:
        return b[None, ...]
    if b.ndim == order and b.shape[0] == 1:
        return b
    raise ShapeError(
        f"action operands must be order {order - 1} (or order {order} with a leading "
        f"singleton), got shape {b.shape}"
    )


def tensor_action(A, Bs: Sequence) -> DenseTensor:
    """Action of an order-n tensor on an (n-1)-tuple of order-(n-1) operands.

    b[1, i2..in] = sum_k prod_t b^(t)[1, i2..it, k, i(t+2)..in] * a[k, i2..in]

    Operands given as order-(n-1) arrays are embedded with a leading singleton
    index.  For n = 2 this is the row-vector/matrix product.
    """
    a = as_array(A)
    n = a.ndim
    if len(Bs) != n - 1:
        raise ShapeError(f"an order-{n} tensor acts on {n - 1} operands, got {len(Bs)}")
    embedded = [_embed_leading(as_array(b), n) for b in Bs]
    return nary_product([*embedded, a])


def outer_product(slices: Sequence) -> DenseTensor:
    """Outer product of n order-n slices, each with a singleton index.

    Operand t < n is singleton at position t+1, the last one at position 1;
    for order 3: d[i,j,k] = a[i,1,k] * b[i,j,1] * c[1,j,k].
    """
    arrays = [as_array(s) for s in slices]
    n = len(arrays)
    for t, a in enumerate(arrays):
        axis = _summed_axis(t, n)
        if a.ndim != n or a.shape[axis] != 1:
            raise ShapeError(
                f"outer-product operand {t + 1} must be order {n} with a singleton at "
                f"position {axis + 1}, got shape {a.shape}"
            )
    return nary_product(arrays)


def bg_triple_dot(u, v, w, T) -> complex:
    """Triplet dot product of three vectors with background tensor T.

    sum_{i,j,k} u_i * v_j^{c_3^1} * w_k^{c_3^2} * t[i,j,k]
    """
    u, v, w, t = (as_array(x) for x in (u, v, w, T))
    u, v, w = u.reshape(-1), v.reshape(-1), w.reshape(-1)
    if t.shape != (u.size, v.size, w.size):
        raise ShapeError(
            f"background tensor shape {t.shape} does not match vector lengths "
            f"{(u.size, v.size, w.size)}"
        )
    vc = conj_p_array(v, 3, 1)
    wc = conj_p_array(w, 3, 2)
    return complex(np.einsum("i,j,k,ijk->", u, vc, wc, t))


def _as_matrix(x, name: str) -> np.ndarray:
    a = as_array(x)
    if a.ndim == 3:
        squeezed = [d for d in a.shape if d != 1]
        if len(squeezed) <= 2:
            a = a.reshape([d for d in a.shape if d != 1] or [1, 1])
    if a.ndim != 2:
        raise ShapeError(f"{name} must be a matrix (or an oriented slice), got shape {a.shape}")
    return a


def bg_matrix_product(A, B, C, T) -> DenseTensor:
    """Tucker-style product of three matrices with a background tensor.

    d[m,n,p] = sum_{i,j,k} a[m,i] * b[n,j] * c[k,p] * t[i,j,k]   (no conjugation)
    """
    a = _as_matrix(A, "A")
    b = _as_matrix(B, "B")
    c = _as_matrix(C, "C")
    t = as_array(T)
    if t.ndim != 3:
        raise ShapeError("the background tensor must have order 3")
    if (a.shape[1], b.shape[1], c.shape[0]) != t.shape:
        raise ShapeError(
            f"contracted sizes {(a.shape[1], b.shape[1], c.shape[0])} do not match "
            f"background shape {t.shape}"
        )
    # contract one mode at a time, always in index order
    d = np.einsum("mi,ijk->mjk", a, t)
    d = np.einsum("nj,mjk->mnk", b, d)
    d = np.einsum("mnk,kp->mnp", d, c)
    return DenseTensor._wrap(d)


def inner_p(operands: Sequence) -> complex:
    """Inner product of a p-tuple of equally shaped tensors.

    Operand t (0-based) is read at the index tuple rotated t times by the
    cyclic transpose and carries the conjugate ``c_p^{p-t}``; operand 0 is
    left unconjugated.  For vectors the rotation is trivial; for p = 2 this
    is the sesquilinear product sum_j x_j * conj(y_j).
    """
    arrays = [as_array(x) for x in operands]
    p = len(arrays)
    if p < 2:
        raise ShapeError("the inner product needs at least two operands")
    shape = arrays[0].shape
    if any(a.shape != shape for a in arrays):
        raise ShapeError(f"inner-product operands must share a shape, got {[a.shape for a in arrays]}")
    order = len(shape)
    if order >= 2 and len(set(shape)) != 1:
        raise ShapeError(f"tensor inner products need cubic operands, got shape {shape}")
    prod = np.ones(shape, dtype=np.complex128)
    for t, a in enumerate(arrays):
        rotated = _transpose_array(a, t) if order >= 2 else a
        prod = prod * conj_p_array(rotated, p, p - t)
    return complex(np.sum(prod))


def lp_norm(X, p: int) -> float:
    """ell_p norm through the product of all p conjugates of every entry.

    prod_j x^{c_p^{p-j}} = |x|^p, so this equals (sum |x|^p)^(1/p).
    """
    p = int(p)
    if p < 2:
        raise ValueError(f"norm order must be >= 2, got {p}")
    x = as_array(X)
    prod = np.ones(x.shape, dtype=np.complex128)
    for j in range(1, p + 1):
        prod = prod * conj_p_array(x, p, p - j)
    total = float(np.sum(prod.real))
    return max(total, 0.0) ** (1.0 / p)


def hermitian_norm_witness(A) -> complex:
    """sum_k [o(A,A,A)]_{kkk} + sum_{i<j<k} a_ijk * a_kij^{c_3^2} * a_jki^{c_3^1}."""
    a = as_array(A)
    if a.ndim != 3 or len(set(a.shape)) != 1:
        raise ShapeError(f"the witness needs a cubic order-3 tensor, got shape {a.shape}")
    l = a.shape[0]
    cube = as_array(ternary_product(a, a, a))
    idx = np.arange(l)
    total = complex(np.sum(cube[idx, idx, idx]))
    c2 = conj_p_array(a, 3, 2)
    c1 = conj_p_array(a, 3, 1)
    for i in range(l):
        for j in range(i + 1, l):
            for k in range(j + 1, l):
                total += a[i, j, k] * c2[k, i, j] * c1[j, k, i]
    return total
