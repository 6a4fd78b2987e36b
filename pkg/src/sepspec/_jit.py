"""Selects between the numba kernels and the pure-numpy fallback.

Set ``SEPSPEC_DISABLE_JIT=1`` to force the numpy path. The numpy path is also
used when numba cannot be imported.
"""

import os

_FLAG = os.environ.get("SEPSPEC_DISABLE_JIT", "").strip().lower()
JIT_DISABLED = _FLAG not in ("", "0", "false", "no")

try:
    import numba  # noqa: F401

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover
    NUMBA_AVAILABLE = False

USE_NUMBA = NUMBA_AVAILABLE and not JIT_DISABLED
