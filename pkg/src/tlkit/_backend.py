"""Kernel backend selection.

The compiled Cython kernels are preferred when the extension was built;
otherwise the pure-Python twin is used.  Set TLKIT_PURE_PYTHON=1 to force
the fallback (the benchmark and the backend-equivalence tests do this
comparison explicitly by importing both modules).
"""

from __future__ import annotations

import os

if os.environ.get("TLKIT_PURE_PYTHON") == "1":
    from . import _kernels_py as _kernels_mod

    _BACKEND_NAME = "python"
else:
    try:
        from . import _kernels as _kernels_mod  # type: ignore[no-redef]

        _BACKEND_NAME = "compiled"
    except ImportError:
        from . import _kernels_py as _kernels_mod  # type: ignore[no-redef]

        _BACKEND_NAME = "python"

enumerate_pairings = _kernels_mod.enumerate_pairings
count_pairings = _kernels_mod.count_pairings
compose_pairings = _kernels_mod.compose_pairings


def backend_name() -> str:
    """Which kernel implementation is active: 'compiled' or 'python'."""
    return _BACKEND_NAME
