"""Ternary-product algebra, spectral systems and characteristic sets for tensors."""

from .algebra import (
    bg_matrix_product,
    bg_triple_dot,
    hermitian_norm_witness,
    inner_p,
    lp_norm,
    nary_product,
    outer_product,
    plan_product,
    ternary_product,
    tensor_action,
)
from .errors import (
    NormOneError,
    NormZeroError,
    ParseError,
    PreconditionError,
    ShapeError,
    TensorSpectraError,
)
from .kernels import BACKEND
from .scalar import PolarComplex, conj_p, conj_p_array, from_polar, principal_angle, to_polar
from .tensor import DenseTensor, adjoint_k, conformance, dim, transpose_k

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DenseTensor",
    "NormOneError",
    "NormZeroError",
    "ParseError",
    "PolarComplex",
    "PreconditionError",
    "ShapeError",
    "TensorSpectraError",
    "adjoint_k",
    "bg_matrix_product",
    "bg_triple_dot",
    "conformance",
    "conj_p",
    "conj_p_array",
    "dim",
    "from_polar",
    "hermitian_norm_witness",
    "inner_p",
    "lp_norm",
    "nary_product",
    "outer_product",
    "plan_product",
    "principal_angle",
    "ternary_product",
    "tensor_action",
    "to_polar",
    "transpose_k",
]
