"""Kernel backend selection.

The compiled extension (fracdyn._l1core, Cython) is preferred; the
pure-numpy module (fracdyn._l1core_py) is the drop-in fallback.  Set
FRACDYN_PURE=1 in the environment to force the fallback.  Both expose
the same four functions with identical semantics; see
benchmarks/bench_kernels.py for a speed comparison.
"""

import importlib
import os

from fracdyn import _l1core_py

_impl = _l1core_py
BACKEND = "pure"

if not os.environ.get("FRACDYN_PURE"):
    try:
        _impl = importlib.import_module("fracdyn._l1core")
        BACKEND = "compiled"
    except ImportError:
        pass

l1_weight_vector = _impl.l1_weight_vector
weighted_history = _impl.weighted_history
weighted_history_rows = _impl.weighted_history_rows
thomas = _impl.thomas


def available_backends():
    """Map of importable backend name -> module (for tests/benchmarks)."""
    found = {"pure": _l1core_py}
    try:
        found["compiled"] = importlib.import_module("fracdyn._l1core")
    except ImportError:
        pass
    return found
