"""Kernel lane selection: compiled Cython extension with a NumPy fallback.

The compiled lane is preferred when the extension built; set the environment
variable ``FROZEN_PLANET_KERNEL`` to ``python`` or ``compiled`` to force a
lane at import time, or call :func:`use_kernel` to switch at runtime (used by
the cross-lane tests and benchmarks).
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

_PY_NAMES = ("python", "py", "pure")
_C_NAMES = ("compiled", "c", "cython")


def _select(name: str):
    if name in _PY_NAMES:
        return _kernels_py
    if name in _C_NAMES:
        if _compiled is None:
            raise ImportError("compiled kernel requested but the extension is not built")
        return _compiled
    raise ValueError(f"unknown kernel lane {name!r}; expected 'python' or 'compiled'")


def _initial():
    forced = os.environ.get("FROZEN_PLANET_KERNEL", "").strip().lower()
    if forced:
        return _select(forced)
    return _compiled if _compiled is not None else _kernels_py


_active = _initial()


def active_kernel():
    """Return the module providing ``ratio_pair`` and ``time_partial``."""
    return _active


def kernel_name() -> str:
    """Name of the active lane: ``"compiled"`` or ``"python"``."""
    return "compiled" if _active is _compiled and _compiled is not None else "python"


def has_compiled() -> bool:
    """True when the Cython extension imported successfully."""
    return _compiled is not None


def use_kernel(name: str) -> str:
    """Switch the active lane and return its canonical name."""
    global _active
    _active = _select(name.strip().lower())
    return kernel_name()
