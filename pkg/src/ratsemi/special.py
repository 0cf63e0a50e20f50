"""Power maps, Chebyshev polynomials, and the specialness test for polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .affine import conjugacy_test
from .poly import Polynomial, chebyshev_poly
from .rational import Mobius, RationalFunction


class SpecialKind(str, Enum):
    POWER = "power-conjugate"
    CHEBYSHEV = "chebyshev-conjugate"
    NEG_CHEBYSHEV = "negative-chebyshev-conjugate"
    NOT_SPECIAL = "not-special-polynomial"
    UNDECIDED = "undecided-rational"


@dataclass(frozen=True)
class SpecialnessReport:
    kind: SpecialKind
    witness: Mobius | None = None
    normal_form: RationalFunction | None = None

    @property
    def is_special(self) -> bool:
        return self.kind in (SpecialKind.POWER, SpecialKind.CHEBYSHEV, SpecialKind.NEG_CHEBYSHEV)


def chebyshev(n: int) -> Polynomial:
    if n < 1:
        raise ValueError("Chebyshev index must be >= 1")
    return chebyshev_poly(n)


def power_map(n: int) -> RationalFunction:
    if n == 0:
        raise ValueError("power map exponent must be nonzero")
    if n > 0:
        return RationalFunction(Polynomial.monomial(n))
    return RationalFunction(Polynomial((1,)), Polynomial.monomial(-n))


def is_special_polynomial(P) -> SpecialnessReport:
    """Decide whether ``P`` is affinely conjugate to z^n, T_n or -T_n.

    The witness ``mu`` satisfies ``conjugate(P, mu) == normal_form``.
    Non-polynomial rational input is reported as undecided (Lattes maps are
    not detected).
    """
    if isinstance(P, RationalFunction):
        if not P.is_polynomial():
            return SpecialnessReport(SpecialKind.UNDECIDED)
        P = P.num
    if not isinstance(P, Polynomial):
        raise TypeError("expected a polynomial")
    n = P.degree
    if n < 2:
        raise ValueError("specialness needs degree >= 2")
    t = chebyshev_poly(n)
    for kind, target in (
        (SpecialKind.POWER, Polynomial.monomial(n)),
        (SpecialKind.CHEBYSHEV, t),
        (SpecialKind.NEG_CHEBYSHEV, -t),
    ):
        mu = conjugacy_test(P, target)
        if mu is not None:
            return SpecialnessReport(kind, mu, RationalFunction(target))
    return SpecialnessReport(SpecialKind.NOT_SPECIAL)


class SpecialInputError(ValueError):
    """Raised by constructions that require a non-special polynomial."""
