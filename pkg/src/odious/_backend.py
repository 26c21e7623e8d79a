"""Kernel selection: the compiled extension when built, else the pure-Python fallback.

Set ODIOUS_PURE_PYTHON=1 to force the fallback (the benchmark and the backend
tests use this to compare both implementations).
"""

import os

if os.environ.get("ODIOUS_PURE_PYTHON"):
    from . import _kernels_py as kernels

    COMPILED = False
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        COMPILED = False
