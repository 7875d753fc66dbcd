"""Kernel backend selection.

The compiled extension is preferred; the numpy implementation is the
fallback.  Set ALBERT_ORBITS_PURE=1 to force the fallback (used by the
benchmark to compare both).
"""

import os

if os.environ.get("ALBERT_ORBITS_PURE") == "1":
    from . import _pycore as kernels
else:
    try:
        from . import _fastcore as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _pycore as kernels

BACKEND = kernels.BACKEND
matmul = kernels.matmul
rref = kernels.rref
rank = kernels.rank
solve = kernels.solve
inv = kernels.inv
