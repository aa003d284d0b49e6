"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; set
``CLIQUEPERC_PURE=1`` to force the pure-Python kernels (used by the
benchmark and by environments without a C++ toolchain).
"""

import os

if os.environ.get("CLIQUEPERC_PURE", "") not in ("", "0"):
    from . import _kernels_py as kernels
    BACKEND = "pure"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels
        BACKEND = "pure"

__all__ = ["kernels", "BACKEND"]
