"""Hot kernels: compiled extension when available, pure Python otherwise.

Set ``MORSEGRAPH_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names
the implementation in use.
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("MORSEGRAPH_PURE_PYTHON"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

clique_masks = _impl.clique_masks
rank_mod_p = _impl.rank_mod_p


def unit_eliminate(cols, nrows):
    """Unit-pivot elimination; falls back to exact Python ints on overflow."""
    if _impl is not _fallback:
        try:
            return _impl.unit_eliminate(cols, nrows)
        except OverflowError:
            pass
    return _fallback.unit_eliminate(cols, nrows)


__all__ = ["BACKEND", "clique_masks", "rank_mod_p", "unit_eliminate"]
