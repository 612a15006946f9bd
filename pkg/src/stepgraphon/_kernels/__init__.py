"""Hot numerical kernels with a compiled fast path.

The Cython extension is optional; a vectorized NumPy fallback provides the
same interface and is selected automatically when the extension is missing.
Set STEPGRAPHON_PURE_PYTHON=1 to force the fallback.
"""

import os

_impl = None
if not os.environ.get("STEPGRAPHON_PURE_PYTHON"):
    try:
        from . import _native as _impl
    except ImportError:
        _impl = None
if _impl is None:
    from . import fallback as _impl

BACKEND = _impl.BACKEND
jacobi_eigh = _impl.jacobi_eigh
ternary_min_ratio = _impl.ternary_min_ratio
