"""Backend selection: numba-accelerated kernels with a pure-NumPy fallback.

The active backend is chosen once at import time from the RELDEV_BACKEND
environment variable:

    RELDEV_BACKEND=numba   force numba (ImportError if unavailable)
    RELDEV_BACKEND=numpy   force the pure-NumPy/Python implementations
    unset / auto           numba when importable, NumPy otherwise

Hot loops live in modules that call `maybe_jit`; everything else is plain
NumPy regardless of backend.
"""

import os

_choice = os.environ.get("RELDEV_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(f"RELDEV_BACKEND must be 'numba', 'numpy' or 'auto', got {_choice!r}")

if _choice == "numpy":
    NUMBA_ENABLED = False
else:
    try:
        from numba import njit as _njit

        NUMBA_ENABLED = True
    except ImportError:
        if _choice == "numba":
            raise
        NUMBA_ENABLED = False

BACKEND = "numba" if NUMBA_ENABLED else "numpy"


def maybe_jit(func):
    """Compile func with numba when the numba backend is active, else return it unchanged."""
    if NUMBA_ENABLED:
        return _njit(cache=True, nogil=True)(func)
    return func
