"""Backend selection for the float64 hot kernels.

The compiled extension ``coslab._kernels`` is used when it imports; the
numpy/scipy module ``coslab._kernels_py`` is the fallback.  Setting
``COSLAB_KERNELS=python`` forces the fallback.  ``BACKEND`` names the
implementation in use.
"""

import os

from . import _kernels_py

if os.environ.get("COSLAB_KERNELS", "").lower() == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

cos_sum = _impl.cos_sum
cos_antiderivative = _impl.cos_antiderivative
si = _impl.si
window_sums = _impl.window_sums
dirichlet_integral = _impl.dirichlet_integral

__all__ = [
    "BACKEND",
    "cos_sum",
    "cos_antiderivative",
    "si",
    "window_sums",
    "dirichlet_integral",
]
