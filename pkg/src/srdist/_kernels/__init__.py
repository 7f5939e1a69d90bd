"""Backend selection for the geodesic-shooting grid scan.

The compiled Cython kernel is used when available; setting the
environment variable SRDIST_PURE_PYTHON=1 forces the numpy fallback.
Both backends implement the same `scan_su2` / `scan_so3` contract and
produce identical grids up to floating-point rounding.
"""
from __future__ import annotations

import os

from . import _grid_py

if os.environ.get("SRDIST_PURE_PYTHON") == "1":
    _impl = _grid_py
else:
    try:
        from . import _grid_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _grid_py

scan_su2 = _impl.scan_su2
scan_so3 = _impl.scan_so3
BACKEND = _impl.BACKEND_NAME

__all__ = ["scan_su2", "scan_so3", "BACKEND"]
