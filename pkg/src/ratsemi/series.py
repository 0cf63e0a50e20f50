"""Truncated Laurent series at infinity and the Bottcher coordinate.

A :class:`LaurentSeries` stands for ``sum_i a_i z^(top - i)`` with ``prec``
known terms; everything below ``z^(top - prec + 1)`` is unknown.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numbers import coerce
from .poly import Polynomial


class LaurentSeries:
    __slots__ = ("top", "coeffs")

    def __init__(self, top: int, coeffs):
        self.top = top
        self.coeffs = [coerce(c) for c in coeffs]

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    @property
    def low(self) -> int:
        """Lowest exponent whose coefficient is known."""
        return self.top - self.prec + 1

    @classmethod
    def from_polynomial(cls, p: Polynomial, prec: int) -> "LaurentSeries":
        n = p.degree
        return cls(n, [p[n - i] if n - i >= 0 else 0 for i in range(prec)])

    def coeff(self, e: int):
        i = self.top - e
        if i < 0:
            return Fraction(0)
        if i >= self.prec:
            raise IndexError(f"exponent {e} is below the known range")
        return self.coeffs[i]

    def truncate(self, prec: int) -> "LaurentSeries":
        return LaurentSeries(self.top, self.coeffs[:prec])

    def strip(self) -> "LaurentSeries":
        """Drop leading zero coefficients (precision shrinks accordingly)."""
        k = 0
        while k < self.prec and self.coeffs[k] == 0:
            k += 1
        if k == self.prec:
            raise ArithmeticError("series vanishes to the known precision")
        return LaurentSeries(self.top - k, self.coeffs[k:])

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries(0, [other] + [0] * max(0, -self.low))
        top = max(self.top, other.top)
        low = max(self.low, other.low)
        out = []
        for e in range(top, low - 1, -1):
            a = self.coeff(e) if e <= self.top else 0
            b = other.coeff(e) if e <= other.top else 0
            out.append(a + b)
        return LaurentSeries(top, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.top, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            c = coerce(other)
            return LaurentSeries(self.top, [c * a for a in self.coeffs])
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n):
            acc = Fraction(0)
            for i in range(k + 1):
                x = a[i]
                if x != 0:
                    y = b[k - i]
                    if y != 0:
                        acc = acc + x * y
            out.append(acc)
        return LaurentSeries(self.top + other.top, out)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentSeries":
        s = self.strip()
        a = s.coeffs
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, s.prec):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if a[i] != 0:
                    acc = acc + a[i] * out[k - i]
            out.append(-acc * inv0)
        return LaurentSeries(-s.top, out)

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.inverse()
        return self * (1 / coerce(other))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc = LaurentSeries(0, [1] + [0] * (self.prec - 1))
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def root(self, r: int) -> "LaurentSeries":
        """r-th root of a series with leading coefficient 1 and top divisible by r."""
        s = self.strip()
        if s.coeffs[0] != 1 or s.top % r:
            raise ArithmeticError("root needs a monic series with divisible top exponent")
        alpha = Fraction(1, r)
        f = s.coeffs
        g = [Fraction(1)]
        for k in range(1, s.prec):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if f[j] != 0:
                    acc = acc + ((alpha + 1) * j - k) * f[j] * g[k - j]
            g.append(acc / k)
        return LaurentSeries(s.top // r, g)

    def compose(self, S: "LaurentSeries") -> "LaurentSeries":
        """self(S) for a series S with positive top exponent.

        self must be z * (power series in 1/z), i.e. top == 1.
        """
        if self.top != 1:
            raise ValueError("outer series must have top exponent 1")
        S = S.strip()
        d = S.top
        if d <= 0:
            raise ValueError("inner series must have positive top exponent")
        T = S.inverse()
        # terms of h(1/S) with index k contribute from exponent -d k downward
        need = min(self.prec, (S.prec - 1) // d + 1)
        acc = LaurentSeries(0, [self.coeffs[need - 1]] + [0] * (S.prec - 1))
        for k in range(need - 2, -1, -1):
            acc = acc * T + self.coeffs[k]
        out = S * acc
        return out.truncate(min(S.prec, d * self.prec))

    def polynomial_part(self) -> Polynomial:
        return Polynomial([self.coeff(e) for e in range(0, self.top + 1)])

    def negative_part_vanishes(self) -> bool:
        return all(self.coeff(e) == 0 for e in range(-1, self.low - 1, -1))

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        lo = max(self.low, other.low)
        hi = max(self.top, other.top)
        for e in range(hi, lo - 1, -1):
            a = self.coeff(e) if e <= self.top else 0
            b = other.coeff(e) if e <= other.top else 0
            if a != b:
                return False
        return True

    def __repr__(self):
        terms = [f"{c}*z^{self.top - i}" for i, c in enumerate(self.coeffs) if c != 0]
        return f"LaurentSeries({' + '.join(terms) or '0'} + O(z^{self.low - 1}))"


@dataclass(frozen=True)
class BottcherSeries:
    """phi(z) = z (1 + c_1/z + c_2/z^2 + ...) with phi o P o phi^-1 = z^n."""

    base: Polynomial
    coeffs: tuple  # (c_1, ..., c_order)
    truncation_order: int

    def series(self) -> LaurentSeries:
        return LaurentSeries(1, (Fraction(1),) + tuple(self.coeffs))

    def check_identity(self) -> bool:
        """phi(P(z)) == phi(z)^n through the truncation order."""
        phi = self.series()
        n = self.base.degree
        lhs = phi.compose(LaurentSeries.from_polynomial(self.base, phi.prec))
        return lhs == phi ** n


def _check_monic_centered(P: Polynomial):
    n = P.degree
    if n < 2:
        raise ValueError("Bottcher expansion needs degree >= 2")
    if P.lead != 1 or P[n - 1] != 0:
        raise ValueError("Bottcher expansion needs a monic centered polynomial")


def bottcher_expand(P: Polynomial, order: int) -> BottcherSeries:
    """Bottcher coordinate of a monic centered P through c_order.

    Fixed point phi <- (phi o P)^(1/n); each pass multiplies the number of
    correct terms by n, and the loop stops once a pass changes nothing.
    """
    _check_monic_centered(P)
    n = P.degree
    prec = order + 1
    Ps = LaurentSeries.from_polynomial(P, prec)
    phi = LaurentSeries(1, [1] + [0] * order)
    for _ in range(200):
        nxt = phi.compose(Ps).root(n).truncate(prec)
        if nxt.coeffs == phi.coeffs:
            break
        phi = nxt
    else:
        raise ArithmeticError("Bottcher iteration did not stabilize")
    return BottcherSeries(P, tuple(phi.coeffs[1:]), order)


def series_inverse(phi: LaurentSeries) -> LaurentSeries:
    """Compositional inverse psi of phi = z + O(1), both with top exponent 1."""
    prec = phi.prec
    ident = LaurentSeries(1, [1] + [0] * (prec - 1))
    psi = ident
    for _ in range(4 * prec + 8):
        nxt = (ident * psi / phi.compose(psi)).truncate(prec)
        if nxt.coeffs == psi.coeffs:
            return nxt
        psi = nxt
    raise ArithmeticError("series reversion did not stabilize")
