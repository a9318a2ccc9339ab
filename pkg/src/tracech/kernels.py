"""Kernel selection: compiled Cython core if built, otherwise pure Python.

Set ``TRACECH_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("TRACECH_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

backend = compiled_backend or python_backend
BACKEND_NAME = "cython" if compiled_backend is not None else "python"

GOOD = python_backend.GOOD
SCENARIO_1 = python_backend.SCENARIO_1
SCENARIO_2 = python_backend.SCENARIO_2

closed_walks = backend.closed_walks
classify_walk = backend.classify_walk


def int_walk_weight_sum(weights, n, k):
    """Exact integer sum; the compiled path falls back on int64 overflow."""
    if compiled_backend is not None:
        try:
            return compiled_backend.int_walk_weight_sum(weights, n, k)
        except OverflowError:
            pass
    return python_backend.int_walk_weight_sum(weights, n, k)
