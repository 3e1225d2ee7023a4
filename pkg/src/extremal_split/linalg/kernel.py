"""Kernel backend selection.

The compiled extension is preferred when present; setting
``EXTREMAL_SPLIT_PURE_PYTHON=1`` forces the pure-Python twin (used by
the benchmark and by tests that compare the two backends).
"""

from __future__ import annotations

import os

if os.environ.get("EXTREMAL_SPLIT_PURE_PYTHON"):
    from . import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernel_py as _impl

        BACKEND = "python"

mat_mul = _impl.mat_mul
trace_product = _impl.trace_product
bareiss = _impl.bareiss
berkowitz = _impl.berkowitz
