"""Rational functions in one variable and the composition semigroup operations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .numbers import Coefficient, FieldElement, coerce, to_complex
from .poly import Polynomial, gcd

DEFAULT_DEGREE_CAP = 4096


class DegreeCapExceeded(ArithmeticError):
    """A composition would exceed the configured degree cap.

    This marks exhaustion of a search bound, not a corrupted value.
    """

    def __init__(self, degree: int, cap: int):
        super().__init__(f"degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


class Pole:
    """Marker returned by :meth:`RationalFunction.evaluate` at a pole."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "pole"


POLE = Pole()


class RationalFunction:
    """Reduced quotient num/den with monic denominator.

    Construction always normalizes, so equality is coefficientwise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial(num if isinstance(num, (list, tuple)) else (num,))
        if den is None:
            den = Polynomial((1,))
        elif not isinstance(den, Polynomial):
            den = Polynomial(den if isinstance(den, (list, tuple)) else (den,))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.degree > 0 and not num.is_zero():
            g = gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        elif num.is_zero():
            den = Polynomial((1,))
        lc = den.lead
        if lc != 1:
            inv = 1 / lc
            num, den = num * inv, den * inv
        self.num = num
        self.den = den

    # -- constructors
    @classmethod
    def identity(cls) -> "RationalFunction":
        return cls(Polynomial.x())

    @classmethod
    def from_coeffs(cls, num: Iterable, den: Iterable = (1,)) -> "RationalFunction":
        return cls(Polynomial(num), Polynomial(den))

    # -- inspection
    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError("not a polynomial")
        return self.num

    def coefficient_field(self):
        from .numbers import common_field

        return common_field(self.num.coeffs + self.den.coeffs)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Polynomial):
            return self.is_polynomial() and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    # -- operations
    def __call__(self, x):
        return compose(self, x) if isinstance(x, RationalFunction) else self.evaluate(x)

    def evaluate(self, x):
        """Exact value for exact input, complex value for float input, or POLE."""
        if isinstance(x, (float, complex)):
            d = self.den(complex(x))
            if d == 0:
                return POLE
            return self.num(complex(x)) / d
        d = self.den(coerce(x))
        if d == 0:
            return POLE
        return coerce(self.num(coerce(x)) / d)

    def negate_arg(self) -> "RationalFunction":
        """F(-z)."""
        return RationalFunction(self.num.subs_neg(), self.den.subs_neg())

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def numeric_pair(self) -> tuple[list[complex], list[complex]]:
        return [to_complex(c) for c in self.num.coeffs], [to_complex(c) for c in self.den.coeffs]


def normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    """The unique reduced representative of num/den (monic denominator)."""
    return RationalFunction(num, den)


def _check_cap(degree: int, cap: int | None):
    if cap is not None and degree > cap:
        raise DegreeCapExceeded(degree, cap)


def compose(F: RationalFunction, G: RationalFunction, degree_cap: int | None = DEFAULT_DEGREE_CAP) -> RationalFunction:
    """F o G, normalized."""
    _check_cap(F.degree * G.degree, degree_cap)
    if G.is_polynomial():
        g = G.num
        return RationalFunction(F.num(g), F.den(g))
    if F.is_polynomial() and F.degree <= 0:
        return F
    # homogenize: F(g/h) = sum a_i g^i h^(d-i) / sum b_i g^i h^(d-i)
    g, h = G.num, G.den
    d = F.degree
    gp = [Polynomial((1,))]
    hp = [Polynomial((1,))]
    for _ in range(d):
        gp.append(gp[-1] * g)
        hp.append(hp[-1] * h)

    def homog(p: Polynomial) -> Polynomial:
        acc = Polynomial()
        for i, c in enumerate(p.coeffs):
            if c != 0:
                acc = acc + gp[i] * hp[d - i] * c
        return acc

    return RationalFunction(homog(F.num), homog(F.den))


def iterate(F: RationalFunction, k: int, degree_cap: int | None = DEFAULT_DEGREE_CAP) -> RationalFunction:
    """F composed with itself k times (k >= 1)."""
    if k < 1:
        raise ValueError("iterate count must be >= 1")
    _check_cap(F.degree ** k, degree_cap)
    result = F
    for _ in range(k - 1):
        result = compose(F, result, degree_cap)
    return result


def equals(F: RationalFunction, G: RationalFunction) -> bool:
    return F == G


@dataclass(frozen=True)
class Mobius:
    """(a z + b) / (c z + d), normalized so the first nonzero of (a, b, c, d) is 1."""

    a: Coefficient
    b: Coefficient
    c: Coefficient
    d: Coefficient

    def __post_init__(self):
        vals = [coerce(v) for v in (self.a, self.b, self.c, self.d)]
        if vals[0] * vals[3] - vals[1] * vals[2] == 0:
            raise ValueError("degenerate Mobius transformation (ad - bc = 0)")
        first = next(v for v in vals if v != 0)
        inv = 1 / first
        vals = [coerce(v * inv) for v in vals]
        for name, v in zip("abcd", vals):
            object.__setattr__(self, name, v)

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    @classmethod
    def affine(cls, a, b=0) -> "Mobius":
        return cls(a, b, 0, 1)

    @classmethod
    def from_rational(cls, F: RationalFunction) -> "Mobius":
        if F.degree != 1:
            raise ValueError("not a degree-one rational function")
        return cls(F.num[1], F.num[0], F.den[1], F.den[0])

    def to_rational(self) -> RationalFunction:
        return RationalFunction(Polynomial((self.b, self.a)), Polynomial((self.d, self.c)))

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: "Mobius") -> "Mobius":
        """self o other."""
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return Mobius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def is_affine(self) -> bool:
        return self.c == 0

    def __str__(self):
        return str(self.to_rational())


def conjugate(F: RationalFunction, mu: Mobius, degree_cap: int | None = DEFAULT_DEGREE_CAP) -> RationalFunction:
    """mu o F o mu^-1."""
    return compose(mu.to_rational(), compose(F, mu.inverse().to_rational(), degree_cap), degree_cap)


def z() -> RationalFunction:
    return RationalFunction.identity()


def poly(*coeffs) -> RationalFunction:
    """Polynomial from ascending coefficients, as a RationalFunction."""
    return RationalFunction(Polynomial(coeffs))
