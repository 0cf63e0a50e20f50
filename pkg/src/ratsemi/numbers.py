"""Exact coefficients: rationals and elements of small number fields.

Rational coefficients are plain :class:`fractions.Fraction` values.  Anything
irrational lives in a :class:`NumberField` given by a monic modulus over the
rationals; the cyclotomic fields Q(zeta_m) are the common case, pure radical
rings Q[x]/(x^g - t) show up for conjugation witnesses.

Arithmetic between a :class:`FieldElement` and a Fraction (or int) works in
either order.  Use :func:`coerce` to get the canonical form of a coefficient:
a Fraction whenever the value is rational.
"""
from __future__ import annotations

import cmath
import functools
from fractions import Fraction
from typing import Sequence, Union

Coefficient = Union[Fraction, "FieldElement"]


# -- dense helpers on ascending coefficient lists over Q -------------------------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qmul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _qdivmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    inv = 1 / Fraction(b[-1])
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1])


def _qsub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _qinverse_mod(a: Sequence, m: Sequence) -> list:
    """Inverse of ``a`` modulo ``m`` in Q[x]; ZeroDivisionError if not a unit."""
    r0, r1 = list(m), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _qdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qsub(s0, _qmul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible in this ring")
    c = 1 / r0[0]
    return [c * x for x in s0]


def cyclotomic_polynomial(m: int) -> tuple[Fraction, ...]:
    """Ascending coefficients of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    p = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            p, r = _qdivmod(p, cyclotomic_polynomial(d))
            assert not r
    return tuple(p)


# -- number fields ---------------------------------------------------------------

class NumberField:
    """Q[x]/(modulus) with a chosen complex embedding of the generator.

    The modulus need not be irreducible (radical rings x^g - t are used as
    is); inversion fails with ZeroDivisionError on a zero divisor.
    """

    def __init__(self, modulus: Sequence, embedding: complex, label: str, m: int | None = None):
        mod = [Fraction(c) for c in modulus]
        if not mod or mod[-1] != 1 or len(mod) < 2:
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = tuple(mod)
        self.degree = len(mod) - 1
        self.embedding = complex(embedding)
        self.label = label
        self.m = m  # cyclotomic order, when the field is Q(zeta_m)

    def __repr__(self):
        return f"NumberField({self.label})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def element(self, coords: Sequence) -> "FieldElement":
        return FieldElement(self, [Fraction(c) for c in coords])

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return FieldElement(self, [-self.modulus[0]])
        return FieldElement(self, [0, 1])

    def to_json(self) -> dict:
        if self.m is not None:
            return {"m": self.m}
        return {"modulus": [str(c) for c in self.modulus], "embedding": [self.embedding.real, self.embedding.imag]}


@functools.lru_cache(maxsize=None)
def cyclotomic_field(m: int) -> NumberField:
    return NumberField(cyclotomic_polynomial(m), cmath.exp(2j * cmath.pi / m), f"Q(zeta_{m})", m=m)


@functools.lru_cache(maxsize=None)
def radical_ring(g: int, t: Fraction) -> NumberField:
    """Q[x]/(x^g - t), generator embedded as the principal g-th root of t."""
    t = Fraction(t)
    emb = complex(t) ** (1.0 / g) if t > 0 else cmath.exp(cmath.log(complex(t)) / g)
    mod = [-t] + [Fraction(0)] * (g - 1) + [Fraction(1)]
    return NumberField(mod, emb, f"Q({t}^(1/{g}))")


def root_of_unity(m: int, j: int = 1) -> Coefficient:
    """zeta_m ** j, as a Fraction when rational."""
    j %= m
    if j == 0:
        return Fraction(1)
    if 2 * j == m:
        return Fraction(-1)
    field = cyclotomic_field(m)
    return field.gen() ** j


class FieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Sequence):
        self.field = field
        c = [Fraction(x) for x in coords]
        if len(c) > field.degree:
            _, c = _qdivmod(c, field.modulus)
        c = list(c) + [Fraction(0)] * (field.degree - len(c))
        self.coords = tuple(c)

    # -- inspection
    def is_rational(self) -> bool:
        return all(x == 0 for x in self.coords[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def __complex__(self):
        z = self.field.embedding
        acc = 0j
        for c in reversed(self.coords):
            acc = acc * z + float(c)
        return acc

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*g^{i}")
        return f"<{' + '.join(terms) or '0'} in {self.field.label}>"

    # -- arithmetic
    def _lift(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"mixed fields {self.field.label} and {other.field.label}")
            return other.coords
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = self.field.degree
        return FieldElement(self.field, [self.coords[i] + (o[i] if i < len(o) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-x for x in self.coords])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-FieldElement(self.field, o))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, o) - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if len(o) == 1:
            return FieldElement(self.field, [x * o[0] for x in self.coords])
        return FieldElement(self.field, _qmul(_trim(list(self.coords)), _trim(list(o))))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_rational():
            r = self.coords[0]
            if r == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement(self.field, [1 / r])
        return FieldElement(self.field, _qinverse_mod(self.coords, self.field.modulus))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * FieldElement(self.field, o).inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, o) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = FieldElement(self.field, [1])
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.modulus, self.coords))

    def __bool__(self):
        return any(self.coords)


def coerce(c) -> Coefficient:
    """Canonical coefficient: Fraction when rational, FieldElement otherwise."""
    if isinstance(c, FieldElement):
        return c.coords[0] if c.is_rational() else c
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


def to_complex(c) -> complex:
    return complex(c) if isinstance(c, FieldElement) else complex(float(c))


def common_field(coeffs) -> NumberField | None:
    """The single number field among ``coeffs``, or None when all are rational."""
    field = None
    for c in coeffs:
        if isinstance(c, FieldElement):
            if field is None:
                field = c.field
            elif c.field != field:
                raise ValueError("coefficients from different fields")
    return field


def coeff_to_json(c):
    c = coerce(c)
    if isinstance(c, Fraction):
        return str(c)
    out = c.field.to_json()
    out["coords"] = [str(x) for x in c.coords]
    return out


def coeff_from_json(obj) -> Coefficient:
    if isinstance(obj, (int, str)):
        return Fraction(obj)
    if isinstance(obj, dict):
        coords = [Fraction(x) for x in obj["coords"]]
        if "m" in obj:
            field = cyclotomic_field(int(obj["m"]))
        else:
            emb = obj.get("embedding", [0.0, 0.0])
            mod = [Fraction(x) for x in obj["modulus"]]
            field = NumberField(mod, complex(emb[0], emb[1]), "custom")
        return coerce(FieldElement(field, coords))
    raise ValueError(f"cannot decode coefficient {obj!r}")


def rational_root(t: Fraction, g: int) -> Fraction | None:
    """A rational g-th root of ``t`` if one exists (the positive one for even g)."""
    t = Fraction(t)
    if g == 1:
        return t
    if t == 0:
        return Fraction(0)
    sign = 1
    if t < 0:
        if g % 2 == 0:
            return None
        sign, t = -1, -t
    num, den = _int_root(t.numerator, g), _int_root(t.denominator, g)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def _int_root(n: int, g: int) -> int | None:
    lo, hi = 0, 1
    while hi ** g < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** g < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** g == n else None
