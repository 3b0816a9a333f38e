"""Search-kernel backend selection.

The hot inner loop (proper 3/4-coloring extension search) exists twice
with the identical algorithm: a compiled Cython module `_fast` and a
pure-Python twin `pure`.  The compiled one is preferred when it built;
setting the environment variable KEMPE_PURE to a non-empty value other
than "0" forces the pure twin.  Both produce byte-identical results.
"""

from __future__ import annotations

import os

if os.environ.get("KEMPE_PURE", "") not in ("", "0"):
    from . import pure as _backend
else:
    try:
        from . import _fast as _backend  # built at install time when possible
    except ImportError:
        from . import pure as _backend

BACKEND = "fast" if _backend.__name__.endswith("_fast") else "pure"

extend_colors = _backend.extend_colors

__all__ = ["BACKEND", "extend_colors"]
