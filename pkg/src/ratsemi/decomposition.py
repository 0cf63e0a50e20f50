"""Functional decomposition P = V o U.

Polynomials get a complete search: for each right degree d there is at most
one right factor that is monic with zero constant term, and its top
coefficients are read off an approximate root of P.  Non-polynomial targets
only accept splittings supplied by the caller, which are verified.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import nullspace
from .poly import Polynomial
from .rational import Mobius, RationalFunction, compose


@dataclass(frozen=True)
class Decomposition:
    left: RationalFunction   # V
    right: RationalFunction  # U
    target: RationalFunction  # P = V o U

    def verify(self) -> bool:
        return compose(self.left, self.right, None) == self.target

    def swapped(self) -> RationalFunction:
        """U o V, the elementary transformation of the target."""
        return compose(self.right, self.left, None)


@dataclass(frozen=True)
class DecompositionClass:
    """A splitting up to (V, U) ~ (V o mu^-1, mu o U)."""

    representative: Decomposition
    trivial: bool = field(default=False)

    @property
    def left(self) -> RationalFunction:
        return self.representative.left

    @property
    def right(self) -> RationalFunction:
        return self.representative.right

    @property
    def degrees(self) -> tuple[int, int]:
        return self.left.degree, self.right.degree

    def same_class(self, other: "DecompositionClass") -> bool:
        if self.right.degree != other.right.degree:
            return False
        if self.right.is_polynomial() and other.right.is_polynomial():
            return self.right == other.right
        Y = right_factor_quotient(other.right, self.right)
        return Y is not None and Y.degree == 1


class DecompositionError(ValueError):
    pass


# -- right factor quotients ------------------------------------------------------

def right_factor_quotient(W: RationalFunction, B: RationalFunction) -> RationalFunction | None:
    """Y with Y o B == W, or None when no such Y exists.

    Degree non-divisibility is an immediate obstruction.  Otherwise the
    unknown coefficients of Y solve a linear system; polynomial pairs use the
    equivalent B-adic expansion.
    """
    if B.degree < 1:
        raise DecompositionError("right factor must have degree >= 1")
    if W.degree % B.degree:
        return None
    if W.is_polynomial() and B.is_polynomial():
        return _quotient_badic(W.num, B.num)
    return quotient_linear(W, B)


def _quotient_badic(w: Polynomial, b: Polynomial) -> RationalFunction | None:
    digits = []
    rest = w
    while not rest.is_zero():
        rest, r = divmod(rest, b)
        if r.degree > 0:
            return None
        digits.append(r[0])
    return RationalFunction(Polynomial(digits))


def quotient_linear(W: RationalFunction, B: RationalFunction) -> RationalFunction | None:
    """Solve num_W * den_Y(B) - den_W * num_Y(B) = 0 for the coefficients of Y."""
    if W.degree % B.degree:
        return None
    k = W.degree // B.degree
    b, h = B.num, B.den
    bp, hp = [Polynomial((1,))], [Polynomial((1,))]
    for _ in range(k):
        bp.append(bp[-1] * b)
        hp.append(hp[-1] * h)
    basis = [bp[i] * hp[k - i] for i in range(k + 1)]
    cols = [-(W.den * beta) for beta in basis] + [W.num * beta for beta in basis]
    nrows = max(len(c) for c in cols)
    rows = [[c[r] for c in cols] for r in range(nrows)]
    for vec in nullspace(rows, 2 * (k + 1)):
        num, den = Polynomial(vec[: k + 1]), Polynomial(vec[k + 1:])
        if den.is_zero():
            continue
        Y = RationalFunction(num, den)
        if Y.degree == k and compose(Y, B, None) == W:
            return Y
    return None


# -- polynomial splittings ---------------------------------------------------------

def _series_power(f: list, alpha: Fraction, n_terms: int) -> list:
    """Coefficients of f(w)^alpha for a power series with f[0] == 1."""
    g = [Fraction(1)] + [Fraction(0)] * (n_terms - 1)
    for k in range(1, n_terms):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if j < len(f) and f[j] != 0:
                acc = acc + ((alpha + 1) * j - k) * f[j] * g[k - j]
        g[k] = acc / k
    return g


def normalize_polynomial_split(V: RationalFunction, U: RationalFunction) -> tuple[RationalFunction, RationalFunction]:
    """Twist (V, U) so the right factor is monic with zero constant term."""
    u = U.num
    mu = Mobius.affine(1 / u.lead, -u[0] / u.lead)
    return compose(V, mu.inverse().to_rational(), None), compose(mu.to_rational(), U, None)


def right_factor_candidate(W: Polynomial, d: int) -> Polynomial:
    """The monic, zero-constant U of degree d matching the top of W^(d/n)."""
    n = W.degree
    r = n // d
    lead = W.lead
    rev = [W[n - j] / lead for j in range(d)]  # w^n W(1/w)/lead, first d terms
    root = _series_power(rev, Fraction(1, r), d)
    return Polynomial([0] + [root[d - k] for k in range(1, d + 1)])


def left_factor_complement(W, d: int) -> list[DecompositionClass]:
    """All decomposition classes of the polynomial W with right degree d."""
    w = W.num if isinstance(W, RationalFunction) else W
    if isinstance(W, RationalFunction) and not W.is_polynomial():
        raise DecompositionError("left_factor_complement needs a polynomial")
    n = w.degree
    if d <= 1 or d >= n or n % d:
        raise DecompositionError(f"degree {d} is not a proper divisor of {n}")
    U = right_factor_candidate(w, d)
    V = _quotient_badic(w, U)
    if V is None:
        return []
    dec = Decomposition(V, RationalFunction(U), RationalFunction(w))
    assert dec.verify()
    return [DecompositionClass(dec)]


def trivial_classes(P: RationalFunction) -> list[DecompositionClass]:
    ident = RationalFunction.identity()
    first = Decomposition(P, ident, P)
    if P.is_polynomial():
        V, U = normalize_polynomial_split(ident, P)
    else:
        V, U = ident, P
    second = Decomposition(V, U, P)
    return [DecompositionClass(first, True), DecompositionClass(second, True)]


def all_splittings(P: RationalFunction, registered=None) -> list[DecompositionClass]:
    """Every two-factor splitting class of P, trivial ones included and flagged.

    Classes are ordered by right-factor degree.  For non-polynomial P only
    the trivial classes and the verified ``registered`` (V, U) pairs appear.
    """
    if P.degree < 2:
        raise DecompositionError("splittings need degree >= 2")
    out = trivial_classes(P)
    if P.is_polynomial():
        n = P.degree
        for d in range(2, n):
            if n % d == 0:
                out.extend(left_factor_complement(P.num, d))
    for V, U in registered or ():
        dec = Decomposition(V, U, P)
        if not dec.verify():
            raise DecompositionError("registered splitting does not recompose to the target")
        if P.is_polynomial() and U.is_polynomial() and U.degree > 0:
            V, U = normalize_polynomial_split(V, U)
            dec = Decomposition(V, U, P)
        cand = DecompositionClass(dec, trivial=min(V.degree, U.degree) <= 1)
        if not any(c.same_class(cand) for c in out):
            out.append(cand)
    out.sort(key=lambda c: c.right.degree)
    return out


def nontrivial_splittings(P: RationalFunction, registered=None) -> list[DecompositionClass]:
    return [c for c in all_splittings(P, registered) if not c.trivial]


def is_decomposable(P: RationalFunction) -> bool:
    return bool(nontrivial_splittings(P))
