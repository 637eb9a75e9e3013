"""Kernel selection: the compiled extension when importable, numpy otherwise.

Set ``WORDLAB_PURE=1`` to force the numpy implementation.
"""

import os

from . import _fallback

OP_VAR, OP_TABLE, OP_MUL, OP_COMM = 0, 1, 2, 3

_compiled = None
if not os.environ.get("WORDLAB_PURE"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

NAME = "cython" if _compiled is not None else "numpy"
count_values = (_compiled or _fallback).count_values


def implementations() -> dict:
    """All importable kernel implementations, keyed by name."""
    out = {"numpy": _fallback.count_values}
    if _compiled is not None:
        out["cython"] = _compiled.count_values
    return out
