"""Backend selection for the numeric kernels.

Set ``BOSELEX_DISABLE_NUMBA=1`` before import to force the pure-numpy path.
"""

import os

_FALSEY = {"", "0", "false", "no", "off"}

try:
    import numba  # noqa: F401
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

DISABLED_BY_ENV = os.environ.get("BOSELEX_DISABLE_NUMBA", "").strip().lower() not in _FALSEY
USE_NUMBA = HAVE_NUMBA and not DISABLED_BY_ENV


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
