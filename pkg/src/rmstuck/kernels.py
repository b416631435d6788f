"""Kernel backend selection.

The compiled extension (``rmstuck._speedups``) is used when it importable;
otherwise the numpy fallback takes over.  Set ``RMSTUCK_PURE=1`` to force the
fallback, e.g. for the backend benchmark or debugging.
"""

from __future__ import annotations

import os

if os.environ.get("RMSTUCK_PURE", "0").lower() in ("1", "true", "yes"):
    from . import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "ext"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "pure"

decode_batch = _impl.decode_batch
score_columns = _impl.score_columns
missing_assignments = _impl.missing_assignments


def backend() -> str:
    """Name of the active kernel backend: 'ext' or 'pure'."""
    return BACKEND
