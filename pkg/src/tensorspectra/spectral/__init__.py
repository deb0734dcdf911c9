"""Spectral systems, the nonnegative solver, the matrix oracle and hierarchies."""

from .hierarchy import HierarchyNode, matrix_leaf, max_depth, reconstruct, spectral_hierarchy
from .oracle import MatrixSpectrum, matrix_residuals, matrix_spectral_oracle
from .solver import SolveConfig, SolveReport, check_norm, solve_spectral3
from .system import (
    SpectralCandidate3,
    candidate_size,
    eigen_matrices,
    hermitian_generator,
    outer_reconstruct,
    planted_instance,
    scaled_factors,
    spectral_residual3,
    spectral_residual_n,
)

__all__ = [
    "HierarchyNode",
    "MatrixSpectrum",
    "SolveConfig",
    "SolveReport",
    "SpectralCandidate3",
    "candidate_size",
    "check_norm",
    "eigen_matrices",
    "hermitian_generator",
    "matrix_leaf",
    "matrix_residuals",
    "matrix_spectral_oracle",
    "max_depth",
    "outer_reconstruct",
    "planted_instance",
    "reconstruct",
    "scaled_factors",
    "solve_spectral3",
    "spectral_hierarchy",
    "spectral_residual3",
    "spectral_residual_n",
]
