"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python module is
the fallback.  Both implement the same functions with identical arithmetic,
so results do not depend on which backend is active.  Set the environment
variable ``ORLICZ_CHAOS_PURE=1`` before import to force the fallback.
"""

import os

from . import _kernel_py

if os.environ.get("ORLICZ_CHAOS_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

BACKEND = "compiled" if _impl.__name__.endswith("._kernel") else "pure"

POWER = _kernel_py.POWER
PLAIN_POWER = _kernel_py.PLAIN_POWER
EXP_MINUS_ONE = _kernel_py.EXP_MINUS_ONE
PIECEWISE = _kernel_py.PIECEWISE

phi_eval = _impl.phi_eval
modular_sum = _impl.modular_sum
luxemburg_bisect = _impl.luxemburg_bisect


def backend_name():
    """Name of the active backend, "compiled" or "pure"."""
    return BACKEND
