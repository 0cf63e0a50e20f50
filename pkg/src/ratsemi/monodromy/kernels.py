"""Kernel selection: the compiled extension when importable, numpy otherwise.

Set ``RATSEMI_KERNEL=python`` to force the numpy kernels.
"""
from __future__ import annotations

import os

from . import _fallback, _mpkernel

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

KERNELS = {"python": _fallback, "mp": _mpkernel}
if _compiled is not None:
    KERNELS["compiled"] = _compiled


def default_kernel_name() -> str:
    forced = os.environ.get("RATSEMI_KERNEL")
    if forced:
        if forced not in KERNELS:
            raise ValueError(f"unknown kernel {forced!r}; available: {sorted(KERNELS)}")
        return forced
    return "compiled" if _compiled is not None else "python"


def get_kernel(name: str | None = None):
    return KERNELS[name or default_kernel_name()]


HAVE_COMPILED = _compiled is not None
