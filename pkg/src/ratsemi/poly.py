"""Dense univariate polynomials with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .numbers import Coefficient, coerce, to_complex


class Polynomial:
    """Immutable dense polynomial, coefficients in ascending order.

    The zero polynomial has no coefficients and degree -1 (``is_zero`` is the
    preferred test).  Coefficients are kept in canonical form, so two equal
    polynomials always have identical coefficient tuples.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [coerce(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Coefficient, ...] = tuple(c)

    # -- constructors
    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c=1) -> "Polynomial":
        return cls([0] * n + [c])

    # -- inspection
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Coefficient:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, k: int) -> Coefficient:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
                body = str(mag) if (mag != 1 or not mono) else ""
                body = f"{body}*{mono}" if body and mono else (body or mono)
                terms.append(("- " if neg else "+ ") + body)
            else:
                terms.append("+ " + (f"({c!r})*{mono}" if mono else f"({c!r})"))
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[1:]

    # -- ring operations
    def _other(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial((other,))

    def __add__(self, other):
        if not isinstance(other, Polynomial) and not _is_scalar(other):
            return NotImplemented
        o = self._other(other).coeffs
        a = self.coeffs
        n = max(len(a), len(o))
        return Polynomial([(a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Polynomial) and not _is_scalar(other):
            return NotImplemented
        return self + (-self._other(other))

    def __rsub__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self._other(other) - self

    def __mul__(self, other):
        if _is_scalar(other):
            c = coerce(other)
            return Polynomial([c * x for x in self.coeffs]) if c != 0 else Polynomial()
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        acc, base = Polynomial((1,)), self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __divmod__(self, other: "Polynomial"):
        other = self._other(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        if len(a) < len(b):
            return Polynomial(), self
        inv = 1 / b[-1]
        q = [Fraction(0)] * (len(a) - len(b) + 1)
        for k in range(len(a) - len(b), -1, -1):
            c = a[k + len(b) - 1] * inv
            q[k] = c
            if c != 0:
                for j, y in enumerate(b):
                    a[k + j] = a[k + j] - c * y
        return Polynomial(q), Polynomial(a[: len(b) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- calculus and friends
    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def __call__(self, x):
        """Horner evaluation at a coefficient, complex number, polynomial, or series."""
        if isinstance(x, complex) or isinstance(x, float):
            acc = 0j
            for c in reversed(self.coeffs):
                acc = acc * x + to_complex(c)
            return acc
        if isinstance(x, Polynomial):
            acc = Polynomial()
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return Fraction(0) if acc is None else coerce(acc) if _is_scalar(acc) else acc

    def compose(self, other: "Polynomial") -> "Polynomial":
        return self(other)

    def subs_neg(self) -> "Polynomial":
        """P(-z)."""
        return Polynomial([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def shift(self, b) -> "Polynomial":
        """P(z + b) by Horner in the shifted variable."""
        return self(Polynomial((b, 1)))

    def scale_var(self, a) -> "Polynomial":
        """P(a*z)."""
        acc, out = Fraction(1), []
        for c in self.coeffs:
            out.append(c * acc)
            acc = acc * a
        return Polynomial(out)

    def is_even(self) -> bool:
        return all(c == 0 for k, c in enumerate(self.coeffs) if k % 2)

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c != 0]

    def numeric(self) -> list[complex]:
        return [to_complex(c) for c in self.coeffs]


def _is_scalar(x) -> bool:
    from .numbers import FieldElement

    return isinstance(x, (int, Fraction, FieldElement))


def _mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    nz = [(j, y) for j, y in enumerate(b) if y != 0]
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in nz:
            out[i + j] = out[i + j] + x * y
    return out


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def chebyshev_poly(n: int) -> Polynomial:
    """Classical T_n via T_{k+1} = 2 z T_k - T_{k-1}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t0, t1 = Polynomial((1,)), Polynomial.x()
    if n == 0:
        return t0
    two_z = Polynomial((0, 2))
    for _ in range(n - 1):
        t0, t1 = t1, two_z * t1 - t0
    return t1
