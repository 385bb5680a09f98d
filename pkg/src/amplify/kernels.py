"""Kernel backend selection.

Prefers the compiled ``_speedups`` extension; falls back to the pure-Python
twin when the extension is missing, when ``AMPLIFY_PURE`` is set in the
environment, or when a graph exceeds the compiled kernel's 32-vertex width.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _speedups
except ImportError:  # extension not built
    _speedups = None

if _speedups is None or os.environ.get("AMPLIFY_PURE"):
    _fast = None
else:
    _fast = _speedups

BACKEND = "cython" if _fast is not None else "pure"

_FAST_MAX = 32


def find_isomorphism(n, rows_g, rows_h, candidates):
    if _fast is not None and n <= _FAST_MAX:
        return _fast.find_isomorphism(n, rows_g, rows_h, candidates)
    return _pykernels.find_isomorphism(n, rows_g, rows_h, candidates)


def canonical_perm(n, rows):
    if _fast is not None and n <= _FAST_MAX:
        return _fast.canonical_perm(n, rows)
    return _pykernels.canonical_perm(n, rows)


def backends():
    """The available kernel modules, keyed by name (for tests/benchmarks)."""
    out = {"pure": _pykernels}
    if _speedups is not None:
        out["cython"] = _speedups
    return out
