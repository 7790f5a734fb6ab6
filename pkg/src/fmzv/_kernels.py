"""Kernel backend selection.

The compiled extension is used when importable; otherwise the pure-Python
fallback takes over.  Set FMZV_PURE_PYTHON=1 to force the fallback (useful
for benchmarking and for cross-checking the two implementations).
"""

import os

from . import _pure

_impl = None
if not os.environ.get("FMZV_PURE_PYTHON"):
    try:
        from . import _ext as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = None
if _impl is None:
    _impl = _pure


def _probe_compiled() -> bool:
    try:
        from . import _ext  # noqa: F401
        return True
    except ImportError:
        return False


HAVE_COMPILED = _probe_compiled()

tree_dp = _impl.tree_dp
inverse_table = _impl.inverse_table


def backend_name() -> str:
    """Name of the active kernel backend ("compiled" or "pure")."""
    return _impl.backend_name()


def available_backends() -> dict:
    """All importable kernel modules keyed by backend name."""
    out = {"pure": _pure}
    if HAVE_COMPILED:
        from . import _ext

        out["compiled"] = _ext
    return out
