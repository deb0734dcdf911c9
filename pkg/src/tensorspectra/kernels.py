"""Backend selection for the hot kernels.

The compiled extension is used when it imports cleanly; setting the
environment variable ``TENSORSPECTRA_PURE_PYTHON=1`` forces the numpy
fallback.  ``BACKEND`` names the active implementation.
"""

import os

from . import _kernels_py

if os.environ.get("TENSORSPECTRA_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

ternary_product = _impl.ternary_product
spectral_residual_vec = _impl.spectral_residual_vec
spectral_jacobian_fd = _impl.spectral_jacobian_fd

__all__ = ["BACKEND", "ternary_product", "spectral_residual_vec", "spectral_jacobian_fd"]
