"""Spectral ideals of matrices and small 3-tensors, and their characteristic sets."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ..errors import EliminationOrderError, NotRationalError, NotSymmetricError, ShapeError
from .buchberger import GroebnerBasis
from .poly import MultiPoly, to_fraction

__all__ = [
    "rational_matrix",
    "matrix_variables",
    "matrix_char_ideal",
    "tensor3_variables",
    "tensor3_char_ideal",
    "characteristic_set",
    "det_minus_lambda",
]


def _rational_array(A, order: int) -> np.ndarray:
    a = np.array(A, dtype=object)
    if a.ndim != order:
        raise ShapeError(f"expected an order-{order} array, got shape {a.shape}")
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        if isinstance(x, complex) or (hasattr(x, "imag") and not isinstance(x, Fraction) and x.imag):
            if x.imag:
                raise NotRationalError(f"entry {x!r} is not real")
            x = x.real
        out[idx] = to_fraction(x)
    return out


def rational_matrix(A) -> np.ndarray:
    """Square symmetric matrix of Fractions (floats converted through their repr)."""
    a = _rational_array(A, 2)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"matrix must be square, got {a.shape}")
    if any(a[i, j] != a[j, i] for i in range(a.shape[0]) for j in range(i)):
        raise NotSymmetricError("the matrix ideal needs a symmetric matrix")
    return a


def _name(prefix: str, *idx: int) -> str:
    if all(i <= 9 for i in idx):
        return prefix + "".join(str(i) for i in idx)
    return prefix + "_".join(str(i) for i in idx)


def matrix_variables(l: int) -> tuple[str, ...]:
    """q[k,m] > r[k,m] > l1 > ... > ll, each block in row-major order."""
    qs = [_name("q", k, m) for k in range(1, l + 1) for m in range(1, l + 1)]
    rs = [_name("r", k, m) for k in range(1, l + 1) for m in range(1, l + 1)]
    ls = [_name("l", k) for k in range(1, l + 1)]
    return tuple(qs + rs + ls)


def matrix_char_ideal(A, upper_only: bool = False) -> list[MultiPoly]:
    """Generators sum_k l_k q[k,m] r[k,n] - a[m,n] and sum_k q[k,m] r[k,n] - delta(m,n).

    By default every pair (m, n) is used, which pins Q^T R = I and makes the
    eigenvalue elimination ideal nontrivial.  ``upper_only`` keeps m <= n.
    """
    a = rational_matrix(A)
    l = a.shape[0]
    reg = matrix_variables(l)

    def v(name):
        return MultiPoly.var(reg, name)

    gens_a, gens_d = [], []
    for m in range(1, l + 1):
        for n in range(1, l + 1):
            if upper_only and m > n:
                continue
            fa = MultiPoly.constant(reg, -a[m - 1, n - 1])
            fd = MultiPoly.constant(reg, -1 if m == n else 0)
            for k in range(1, l + 1):
                qr = v(_name("q", k, m)) * v(_name("r", k, n))
                fa = fa + v(_name("l", k)) * qr
                fd = fd + qr
            gens_a.append(fa)
            gens_d.append(fd)
    return gens_a + gens_d


def tensor3_variables(l: int) -> tuple[str, ...]:
    """Q > R > S > mu > nu > xi, each block in row-major order."""
    names = []
    for p in ("q", "r", "s"):
        names += [_name(p, i, j, k) for i in range(1, l + 1) for j in range(1, l + 1) for k in range(1, l + 1)]
    for p in ("mu", "nu", "xi"):
        names += [_name(p, i, j) for i in range(1, l + 1) for j in range(1, l + 1)]
    return tuple(names)


def tensor3_char_ideal(A) -> list[MultiPoly]:
    """Real-variable generators of the 3-tensor spectral system for m <= n <= p.

    a[m,n,p] = sum_k (mu[m,k] q[m,k,p] mu[k,p]) (nu[n,k] r[n,k,m] nu[k,m]) (xi[p,k] s[p,k,n] xi[k,n])
    delta[m,n,p] = sum_k q[m,k,p] r[n,k,m] s[p,k,n]
    """
    a = _rational_array(A, 3)
    l = a.shape[0]
    if len(set(a.shape)) != 1:
        raise ShapeError(f"the tensor ideal needs a cubic tensor, got {a.shape}")
    if l > 2:
        raise ShapeError(f"the tensor ideal is limited to side <= 2, got {l}")
    reg = tensor3_variables(l)

    def v(prefix, *idx):
        return MultiPoly.var(reg, _name(prefix, *idx))

    gens_a, gens_d = [], []
    rng = range(1, l + 1)
    for m in rng:
        for n in range(m, l + 1):
            for p in range(n, l + 1):
                fa = MultiPoly.constant(reg, -a[m - 1, n - 1, p - 1])
                fd = MultiPoly.constant(reg, -1 if m == n == p else 0)
                for k in rng:
                    qrs = v("q", m, k, p) * v("r", n, k, m) * v("s", p, k, n)
                    scale = (
                        v("mu", m, k) * v("mu", k, p)
                        * v("nu", n, k) * v("nu", k, m)
                        * v("xi", p, k) * v("xi", k, n)
                    )
                    fa = fa + scale * qrs
                    fd = fd + qrs
                gens_a.append(fa)
                gens_d.append(fd)
    return gens_a + gens_d


def characteristic_set(G: GroebnerBasis, keep: Iterable[str]) -> list[MultiPoly]:
    """Elements of the basis that involve only the variables in ``keep``.

    ``keep`` must be the lowest-ranked variables of the registry so that lex
    is an elimination order for the others.
    """
    keep = set(keep)
    reg = G.registry
    unknown = keep - set(reg)
    if unknown:
        raise EliminationOrderError(f"unknown variables {sorted(unknown)}")
    positions = sorted(reg.index(v) for v in keep)
    if positions != list(range(len(reg) - len(keep), len(reg))):
        raise EliminationOrderError(
            "kept variables must be ranked below every eliminated variable"
        )
    return [g for g in G.generators if g.variables() <= keep]


def det_minus_lambda(A, var: str = "l") -> MultiPoly:
    """det(A - x I) by cofactor expansion, as a polynomial in the single variable ``var``."""
    a = rational_matrix(A) if np.ndim(A) == 2 else None
    if a is None:
        raise ShapeError("det_minus_lambda needs a matrix")
    reg = (var,)
    x = MultiPoly.var(reg, var)
    l = a.shape[0]
    entries = [
        [MultiPoly.constant(reg, a[i, j]) - (x if i == j else 0) for j in range(l)] for i in range(l)
    ]
    return _cofactor_det(entries, reg)


def _cofactor_det(rows: Sequence[Sequence[MultiPoly]], reg) -> MultiPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = MultiPoly(reg)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * _cofactor_det(minor, reg)
        total = total + term if j % 2 == 0 else total - term
    return total
