"""Kernel backend selection.

The compiled Cython core is preferred when present; the NumPy fallback is
used otherwise, or when JCREVIVAL_PURE_PYTHON is set in the environment.
Both backends implement the same three functions (see `_kernels_py`).
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("JCREVIVAL_PURE_PYTHON"):
    kernels = _kernels_py
else:
    try:
        from . import _core as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _kernels_py

USING_COMPILED = kernels is not _kernels_py

sweep_reductions = kernels.sweep_reductions
hermite_psi_table = kernels.hermite_psi_table
fourier_of_samples = kernels.fourier_of_samples
