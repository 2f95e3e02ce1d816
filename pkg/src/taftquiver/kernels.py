"""Kernel backend selection.

The compiled extension is used when it was built; set ``TAFTQUIVER_PURE=1``
to force the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("TAFTQUIVER_PURE", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

mulmod = _impl.mulmod
rewrite_normal = _impl.rewrite_normal

__all__ = ["BACKEND", "mulmod", "rewrite_normal"]
