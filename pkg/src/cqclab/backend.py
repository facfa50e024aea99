"""Kernel backend selection.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python reference kernels take over.  Set ``CQCLAB_PURE_PYTHON=1``
to force the fallback, e.g. for benchmarking one against the other.
"""

import os

from . import _reference

if os.environ.get("CQCLAB_PURE_PYTHON"):
    _active = _reference
else:
    try:
        from . import _speedups as _active
    except ImportError:
        _active = _reference

BACKEND = _active.NAME


def get_backend(name=None):
    """Return a kernel module: None/'auto', 'pure', or 'compiled'."""
    if name in (None, "auto"):
        return _active
    if name in ("pure", "pure-python"):
        return _reference
    if name == "compiled":
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown backend {name!r}")
