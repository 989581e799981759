"""Integration kernel backend selection.

The hot RK4 loops exist twice: a Cython extension (_ckernels) and a pure
Python twin (pykernels).  The extension is preferred when importable; the
fallback keeps the package functional without a compiler.  Set
ARCPPN_PURE_PYTHON=1 to force the fallback, e.g. for benchmarking.
"""

import os

from . import codes, pykernels

__all__ = ["BACKEND", "arc_kernel", "codes", "time_kernel"]

if os.environ.get("ARCPPN_PURE_PYTHON") == "1":
    _impl = pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = pykernels
        BACKEND = "python"

time_kernel = _impl.time_kernel
arc_kernel = _impl.arc_kernel
