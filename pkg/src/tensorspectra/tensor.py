"""Dense tensor value type, transpose/adjoint towers and structural predicates.

Index convention
----------------
Public indices are 1-based.  The cyclic transpose moves every entry one step
along its index tuple::

    (A^T)[u, v, w] = A[w, u, v]            (order 3)
    (A^T)[j1, ..., jn] = A[jn, j1, ..., j(n-1)]   (order n)

so a single nonzero at (1, 2, 3) lands at (2, 3, 1).  This is the reading
under which the diagonal-tensor transposes ``w[p,n] delta[n,m]`` and the
expanded orthogonality sum ``q[m,k,p] q[n,k,m] q[p,k,n]`` both come out
right; see the README for the derivation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .scalar import conj_p_array

__all__ = [
    "DenseTensor",
    "as_array",
    "dim",
    "transpose_k",
    "adjoint_k",
    "Conformance",
    "conformance",
    "max_abs",
]


class DenseTensor:
    """Immutable complex dense array of order n >= 1.

    Storage is a read-only row-major ``numpy`` array; :meth:`__array__` lets
    every numpy routine consume a tensor directly.  Element access through
    ``T[i, j, k]`` uses 1-based indices.
    """

    __slots__ = ("_data",)

    def __init__(self, data) -> None:
        arr = np.array(data, dtype=np.complex128, copy=True, order="C")
        if arr.ndim == 0:
            raise ShapeError("a tensor needs order >= 1")
        if 0 in arr.shape:
            raise ShapeError(f"every dimension must be >= 1, got {arr.shape}")
        arr.flags.writeable = False
        self._data = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "DenseTensor":
        # arr is freshly allocated by the caller and never aliased
        obj = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.complex128)
        arr.flags.writeable = False
        obj._data = arr
        return obj

    @classmethod
    def zeros(cls, shape) -> "DenseTensor":
        return cls._wrap(np.zeros(tuple(shape), dtype=np.complex128))

    @classmethod
    def ones(cls, shape) -> "DenseTensor":
        return cls._wrap(np.ones(tuple(shape), dtype=np.complex128))

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def shape(self) -> tuple[int, ...]:
        return self._data.shape

    @property
    def order(self) -> int:
        return self._data.ndim

    @property
    def is_cubic(self) -> bool:
        return len(set(self.shape)) == 1

    @property
    def is_real(self) -> bool:
        return not np.any(self._data.imag)

    @property
    def real(self) -> np.ndarray:
        return self._data.real

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._data if not copy else self._data.copy()
        return self._data.astype(dtype, copy=True)

    def __getitem__(self, index) -> complex:
        if not isinstance(index, tuple):
            index = (index,)
        if len(index) != self.order:
            raise IndexError(f"expected {self.order} indices, got {len(index)}")
        zero_based = []
        for i, d in zip(index, self.shape):
            if not 1 <= i <= d:
                raise IndexError(f"index {i} out of range 1..{d}")
            zero_based.append(i - 1)
        return complex(self._data[tuple(zero_based)])

    def __len__(self) -> int:
        return self.shape[0]

    def __add__(self, other):
        return DenseTensor._wrap(self._data + as_array(other))

    __radd__ = __add__

    def __sub__(self, other):
        return DenseTensor._wrap(self._data - as_array(other))

    def __rsub__(self, other):
        return DenseTensor._wrap(as_array(other) - self._data)

    def __neg__(self):
        return DenseTensor._wrap(-self._data)

    def __mul__(self, scalar):
        if not np.isscalar(scalar):
            return NotImplemented
        return DenseTensor._wrap(self._data * scalar)

    __rmul__ = __mul__

    def equals(self, other) -> bool:
        """Exact entrywise equality (shape included)."""
        other = as_array(other)
        return other.shape == self.shape and bool(np.array_equal(self._data, other))

    def max_abs_diff(self, other) -> float:
        other = as_array(other)
        if other.shape != self.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")
        return max_abs(self._data - other)

    def __repr__(self) -> str:
        return f"DenseTensor(shape={self.shape})"


def as_array(x) -> np.ndarray:
    """View any tensor-like value as a complex ndarray (no copy when possible)."""
    if isinstance(x, DenseTensor):
        return x.data
    return np.asarray(x, dtype=np.complex128)


def max_abs(x) -> float:
    x = np.asarray(x)
    return float(np.max(np.abs(x))) if x.size else 0.0


def dim(A, k: int) -> int:
    """Size of the k-th (1-based) dimension, or 0 outside 1..order."""
    shape = as_array(A).shape
    if 1 <= k <= len(shape):
        return int(shape[k - 1])
    return 0


def _rotation_axes(n: int, k: int) -> tuple[int, ...]:
    # np.transpose(A, axes)[idx] = A[idx[axes^-1]]; one step of T uses
    # axes (1, 2, ..., n-1, 0), k steps shift by k.
    return tuple((i + k) % n for i in range(n))


def _transpose_array(a: np.ndarray, k: int) -> np.ndarray:
    n = a.ndim
    if n < 2:
        raise ShapeError("transpose needs order >= 2")
    k %= n
    if k == 0:
        return a.copy()
    return np.ascontiguousarray(np.transpose(a, _rotation_axes(n, k)))


def transpose_k(A, k: int = 1) -> DenseTensor:
    """k applications of the cyclic transpose (k reduced modulo the order)."""
    return DenseTensor._wrap(_transpose_array(as_array(A), int(k)))


def adjoint_k(A, k: int = 1) -> DenseTensor:
    """k-th generalized adjoint: transpose_k positions, order-n conjugate values.

    Each entry is conjugated directly from its original polar form with
    ``c_n^k``; this is not the same as applying :func:`adjoint_k` k times.
    """
    a = as_array(A)
    n = a.ndim
    if n < 2:
        raise ShapeError("adjoint needs order >= 2")
    k = int(k) % n
    return DenseTensor._wrap(_transpose_array(conj_p_array(a, n, k), k))


@dataclass(frozen=True)
class Conformance:
    kind: str
    deviation: float
    tol: float

    @property
    def ok(self) -> bool:
        return self.deviation <= self.tol

    def __bool__(self) -> bool:
        return self.ok


def conformance(A, kind: str, tol: float = 1e-12) -> Conformance:
    """Check symmetry (invariance under every cyclic transpose) or hermicity."""
    a = as_array(A)
    if a.ndim < 2 or len(set(a.shape)) != 1:
        raise ShapeError(f"conformance needs a cubic tensor, got shape {a.shape}")
    if kind == "symmetric":
        dev = max(max_abs(_transpose_array(a, k) - a) for k in range(1, a.ndim))
    elif kind == "hermitian":
        dev = max_abs(as_array(adjoint_k(a, 1)) - a)
    else:
        raise ValueError(f"unknown conformance kind {kind!r}")
    return Conformance(kind, dev, tol)
