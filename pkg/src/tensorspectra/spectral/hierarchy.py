"""Spectral hierarchy: solve the 3-tensor system, then split every eigen-matrix."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import EigenSolverError, ShapeError
from ..tensor import DenseTensor, as_array, max_abs
from .solver import SolveConfig, SolveReport, solve_spectral3
from .system import _block, eigen_matrices, scaled_factors

__all__ = ["HierarchyNode", "spectral_hierarchy", "matrix_leaf", "reconstruct", "max_depth"]

COND_LIMIT = 1e10


@dataclass
class HierarchyNode:
    """One node of the spectral tree.

    Order-3 nodes carry the scaled factors (Q~, R~, S~) and 3l children.
    Matrix leaves carry the scaled right eigenvectors (as columns) and left
    eigenvectors (as rows) plus their eigenvalues; a leaf whose matrix is
    not diagonalizable is marked ``truncated`` and keeps the raw matrix.
    """

    level_order: int
    scaled_factors: list[DenseTensor]
    eigenvalues: list[complex] | None = None
    children: list["HierarchyNode"] = field(default_factory=list)
    truncated: bool = False
    matrix: np.ndarray | None = None
    label: str = ""
    report: SolveReport | None = None


def matrix_leaf(M, label: str = "") -> HierarchyNode:
    """Eigen-split M = sum_j (sqrt(g_j) v_j)(sqrt(g_j) w_j) with w_j the left eigenvectors."""
    m = np.array(as_array(M))
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"leaf matrices must be square, got {m.shape}")
    try:
        gamma, V = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(str(exc)) from exc
    truncated = not np.all(np.isfinite(V)) or np.linalg.cond(V) > COND_LIMIT
    if not truncated:
        Vinv = np.linalg.inv(V)
        root = np.sqrt(gamma.astype(np.complex128))
        right = V * root[None, :]
        left = root[:, None] * Vinv
        truncated = max_abs(right @ left - m) > 1e-8 * max(1.0, max_abs(m))
    if truncated:
        return HierarchyNode(2, [], list(gamma), truncated=True, matrix=m, label=label)
    return HierarchyNode(
        2, [DenseTensor(right), DenseTensor(left)], [complex(g) for g in gamma], label=label
    )


def _leaf_matrix(node: HierarchyNode) -> np.ndarray:
    if node.truncated:
        return node.matrix
    right, left = (as_array(x) for x in node.scaled_factors)
    return right @ left


def reconstruct(node: HierarchyNode) -> np.ndarray:
    """Nested expansion of a tree back to the tensor (or matrix) it came from."""
    if node.level_order == 2:
        return _leaf_matrix(node)
    l = len(node.children) // 3
    factors = []
    for f in range(3):
        slices = [_leaf_matrix(c) for c in node.children[f * l:(f + 1) * l]]
        factors.append(np.stack(slices, axis=1))
    return _block(*factors)


def max_depth(node: HierarchyNode) -> int:
    return 1 + max((max_depth(c) for c in node.children), default=0)


def spectral_hierarchy(A, config: SolveConfig | None = None) -> HierarchyNode:
    """Build the spectral tree of an order-2 or order-3 tensor.

    Order 3 runs the nonnegative solver, then splits each of the 3l scaled
    eigen-matrices (slices of Q~, then R~, then S~) into matrix leaves.
    """
    a = as_array(A)
    if a.ndim == 2:
        return matrix_leaf(a, label="root")
    if a.ndim != 3:
        raise ShapeError(f"hierarchies are built for order 2 and 3 only, got order {a.ndim}")
    report = solve_spectral3(a, config)
    factors = scaled_factors(report.candidate)
    children = []
    for name, f in zip("QRS", factors):
        for k, m in enumerate(eigen_matrices(f), start=1):
            children.append(matrix_leaf(m, label=f"{name}{k}"))
    return HierarchyNode(3, list(factors), None, children, label="root", report=report)
