"""Numeric monodromy of coverings and components of separated-variable curves."""
from .curves import (
    DEFAULT_FIBER_CAP,
    CriticalValues,
    CurveComponent,
    CurveReport,
    MonodromySystem,
    ScanCell,
    TameVerdict,
    analyze_curve,
    critical_values,
    fiber_components,
    genus_scan,
    monodromy,
    monodromy_system,
    tame_check,
)
from .kernels import HAVE_COMPILED, default_kernel_name, get_kernel
from .tracking import DEFAULT_TOLERANCE, Chain, PrecisionError, cycle_notation, cycle_type

__all__ = [
    "Chain",
    "CriticalValues",
    "CurveComponent",
    "CurveReport",
    "DEFAULT_FIBER_CAP",
    "DEFAULT_TOLERANCE",
    "HAVE_COMPILED",
    "MonodromySystem",
    "PrecisionError",
    "ScanCell",
    "TameVerdict",
    "analyze_curve",
    "critical_values",
    "cycle_notation",
    "cycle_type",
    "default_kernel_name",
    "fiber_components",
    "genus_scan",
    "get_kernel",
    "monodromy",
    "monodromy_system",
    "tame_check",
]
