"""Kernel backend selection, resolved once at import.

The compiled kernels are preferred when importable; the pure-Python twin
is the fallback.  Set ``IDSBALLS_KERNELS=python`` (or ``c``) to force a
backend; forcing ``c`` raises if the extension is missing rather than
silently degrading.
"""

from __future__ import annotations

import os

_FORCED = os.environ.get("IDSBALLS_KERNELS", "").strip().lower()

if _FORCED in ("py", "python"):
    from . import _kernels_py as kernels
elif _FORCED in ("c", "cython"):
    from . import _kernels_c as kernels  # type: ignore[no-redef]
elif _FORCED:
    raise ImportError(f"unknown IDSBALLS_KERNELS value {_FORCED!r}; use 'c' or 'python'")
else:
    try:
        from . import _kernels_c as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND: str = kernels.BACKEND
