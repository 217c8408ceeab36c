"""Kernel backend selection.

The compiled extension is preferred when importable; the pure numpy twin is
the fallback. Set HYPERJULIA_BACKEND=pure (or =compiled) to force a choice,
e.g. for benchmarking.
"""
from __future__ import annotations

import os

from . import _purekernels

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

_FORCED = os.environ.get("HYPERJULIA_BACKEND")

if _FORCED == "pure":
    _active = _purekernels
elif _FORCED == "compiled":
    if _compiled is None:
        raise ImportError(
            "HYPERJULIA_BACKEND=compiled but the extension is not built; "
            "reinstall with Cython and a C compiler available"
        )
    _active = _compiled
elif _FORCED is None:
    _active = _compiled if _compiled is not None else _purekernels
else:
    raise ImportError(f"unknown HYPERJULIA_BACKEND={_FORCED!r}")

BACKEND_NAME = "compiled" if _active is _compiled else "pure"


def kernels(name: str | None = None):
    """Return a kernel module: the active one, or an explicit backend."""
    if name is None:
        return _active
    if name == "pure":
        return _purekernels
    if name == "compiled":
        if _compiled is None:
            raise ValueError("compiled backend unavailable")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> tuple[str, ...]:
    return ("compiled", "pure") if _compiled is not None else ("pure",)
