"""Composition semigroups of rational functions: exact algebra, commutants,
decompositions and numeric curve monodromy."""
from .numbers import FieldElement, NumberField, cyclotomic_field, root_of_unity
from .poly import Polynomial
from .rational import (
    DEFAULT_DEGREE_CAP,
    DegreeCapExceeded,
    Mobius,
    RationalFunction,
    compose,
    conjugate,
    iterate,
    poly,
    z,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_DEGREE_CAP",
    "DegreeCapExceeded",
    "FieldElement",
    "Mobius",
    "NumberField",
    "Polynomial",
    "RationalFunction",
    "__version__",
    "compose",
    "conjugate",
    "cyclotomic_field",
    "iterate",
    "poly",
    "root_of_unity",
    "z",
]
