"""Kernel backend selection.

Hot kernels are compiled with numba when it is available.  Setting the
environment variable ``SLOCC4_BACKEND=numpy`` forces the pure-numpy
fallback; ``SLOCC4_BACKEND=numba`` insists on numba and fails loudly if it
cannot be imported.  The default (``auto``) uses numba when present.
"""

import os

_choice = os.environ.get("SLOCC4_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"SLOCC4_BACKEND must be 'auto', 'numba' or 'numpy', got {_choice!r}"
    )

if _choice == "numpy":
    _numba = None
else:
    try:
        import numba as _numba
    except ImportError:
        if _choice == "numba":
            raise
        _numba = None

USE_NUMBA = _numba is not None
BACKEND = "numba" if USE_NUMBA else "numpy"


def jit(fn):
    """Compile ``fn`` with numba when enabled, otherwise return it unchanged."""
    if USE_NUMBA:
        return _numba.njit(cache=True)(fn)
    return fn
