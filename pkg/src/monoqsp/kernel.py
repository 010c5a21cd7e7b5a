"""Backend selection for the QSP product fold.

The compiled extension is used when it imports and the order fits its int64
range; otherwise the pure-Python implementation runs with unbounded ints.
Set ``MONOQSP_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _fold_py

try:
    if os.environ.get("MONOQSP_PURE_PYTHON"):
        raise ImportError("pure-Python backend forced")
    from . import _fold as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
COMPILED_MAX_ORDER = _compiled.MAX_ORDER if _compiled is not None else 0


def fold_cyclic(n: int):
    if _compiled is not None and n <= COMPILED_MAX_ORDER:
        return _compiled.fold_cyclic(n)
    return _fold_py.fold_cyclic(n)


fold_cyclic.__doc__ = _fold_py.fold_cyclic.__doc__


def backend_for(n: int) -> str:
    """Name of the implementation :func:`fold_cyclic` uses at order n."""
    if _compiled is not None and n <= COMPILED_MAX_ORDER:
        return "cython"
    return "python"
