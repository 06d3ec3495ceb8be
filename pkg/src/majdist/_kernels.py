"""Kernel selection: compiled extension when available, else pure Python.

Set MAJDIST_PURE=1 to force the fallback (used by the benchmark and by
tests that compare the two implementations).
"""

from __future__ import annotations

import os

if os.environ.get("MAJDIST_PURE"):
    from . import _fallback as impl
else:
    try:
        from . import _speedups as impl  # type: ignore[no-redef]
    except ImportError:
        from . import _fallback as impl  # type: ignore[no-redef]

BACKEND: str = impl.__name__.rsplit(".", 1)[-1].lstrip("_")

syt_counts = impl.syt_counts
avoider_counts = impl.avoider_counts
