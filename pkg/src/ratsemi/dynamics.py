"""Exact checkers for iterate identities, fiber pairs, reversibility and free pairs.

Every positive verdict rests on an exact equality of rational functions.
Searches are bounded; a missing witness only means none was found within
the bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .decomposition import all_splittings
from .exchange import function_to_json
from .rational import DEFAULT_DEGREE_CAP, RationalFunction, compose, iterate, poly

__all__ = [
    "ReversibilityWitness",
    "SisisWitness",
    "build_from_fiber_pair",
    "check_eq_system",
    "check_sisis",
    "common_iterate",
    "even_construction",
    "free_pair_certificate",
    "right_reversibility_equalities",
    "search_sisis",
    "verify_reversibility",
]


class _Iterates:
    """Memoized iterates of one function."""

    def __init__(self, F: RationalFunction, degree_cap):
        self.F = F
        self.cap = degree_cap
        self.cache = {0: RationalFunction.identity(), 1: F}

    def __call__(self, k: int) -> RationalFunction:
        if k not in self.cache:
            self.cache[k] = compose(self.F, self(k - 1), self.cap)
        return self.cache[k]


def _degree_pairs(da: int, db: int, bound: int):
    """(k, l) with 1 <= k, l <= bound and da^k == db^l, in increasing k + l."""
    pairs = [(k, l) for k in range(1, bound + 1) for l in range(1, bound + 1) if da ** k == db ** l]
    return sorted(pairs, key=lambda p: (p[0] + p[1], p[0]))


@dataclass(frozen=True)
class SisisWitness:
    k: int
    l: int
    X: RationalFunction
    P: RationalFunction

    def to_json(self, degree_cap=DEFAULT_DEGREE_CAP) -> dict:
        Xi, Pi = _Iterates(self.X, degree_cap), _Iterates(self.P, degree_cap)
        return {
            "k": self.k,
            "l": self.l,
            "X^(2k)": function_to_json(Xi(2 * self.k)),
            "X^k o P^l": function_to_json(compose(Xi(self.k), Pi(self.l), degree_cap)),
            "P^(2l)": function_to_json(Pi(2 * self.l)),
            "P^l o X^k": function_to_json(compose(Pi(self.l), Xi(self.k), degree_cap)),
        }


def check_sisis(X: RationalFunction, P: RationalFunction, k: int, l: int,
                degree_cap=DEFAULT_DEGREE_CAP) -> bool:
    """X^(2k) == X^k o P^l and P^(2l) == P^l o X^k."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    if X.degree ** k != P.degree ** l:
        return False
    Xi, Pi = _Iterates(X, degree_cap), _Iterates(P, degree_cap)
    Xk, Pl = Xi(k), Pi(l)
    if compose(Xk, Xk, degree_cap) != compose(Xk, Pl, degree_cap):
        return False
    return compose(Pl, Pl, degree_cap) == compose(Pl, Xk, degree_cap)


def search_sisis(X: RationalFunction, P: RationalFunction, bound: int,
                 degree_cap=DEFAULT_DEGREE_CAP) -> SisisWitness | None:
    for k, l in _degree_pairs(X.degree, P.degree, bound):
        if check_sisis(X, P, k, l, degree_cap):
            return SisisWitness(k, l, X, P)
    return None


def check_eq_system(F: RationalFunction, G: RationalFunction, degree_cap=DEFAULT_DEGREE_CAP) -> bool:
    """F o F == F o G and G o G == G o F."""
    return (compose(F, F, degree_cap) == compose(F, G, degree_cap)
            and compose(G, G, degree_cap) == compose(G, F, degree_cap))


class PreconditionError(ValueError):
    pass


def build_from_fiber_pair(A: RationalFunction, X: RationalFunction, Y: RationalFunction,
                          degree_cap=DEFAULT_DEGREE_CAP) -> tuple[RationalFunction, RationalFunction]:
    """(X o A, Y o A) from a solution of A o X == A o Y."""
    if compose(A, X, degree_cap) != compose(A, Y, degree_cap):
        raise PreconditionError("A o X != A o Y")
    F, G = compose(X, A, degree_cap), compose(Y, A, degree_cap)
    assert check_eq_system(F, G, degree_cap)
    return F, G


def even_construction(U: RationalFunction, factor_degree: int | None = None
                      ) -> list[tuple[RationalFunction, RationalFunction, RationalFunction]]:
    """Triples (A, X, X(-z)) from splittings U(z^2) = A o X with X not even.

    ``factor_degree`` restricts to right factors of that degree.
    """
    if not U.is_polynomial():
        raise ValueError("even construction works in polynomial mode")
    F = compose(U, poly(0, 0, 1), None)
    out = []
    for cls in all_splittings(F):
        A, X = cls.left, cls.right
        if X.degree < 1 or (factor_degree is not None and X.degree != factor_degree):
            continue
        Y = X.negate_arg()
        if Y == X:
            continue
        if compose(A, X, None) != compose(A, Y, None):
            raise AssertionError("even construction produced an invalid triple")
        out.append((A, X, Y))
    return out


def common_iterate(A: RationalFunction, B: RationalFunction, bound: int,
                   degree_cap=DEFAULT_DEGREE_CAP) -> tuple[int, int] | None:
    """Least (k, l) with A^k == B^l, scanning only degree-compatible pairs."""
    if A.degree < 2 or B.degree < 2:
        raise ValueError("degrees must be >= 2")
    Ai, Bi = _Iterates(A, degree_cap), _Iterates(B, degree_cap)
    for k, l in _degree_pairs(A.degree, B.degree, bound):
        if Ai(k) == Bi(l):
            return k, l
    return None


@dataclass(frozen=True)
class ReversibilityWitness:
    side: str  # "left": A o X == B o Y; "right": X o A == Y o B
    X: RationalFunction
    Y: RationalFunction

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")

    def sides(self, A, B, degree_cap=DEFAULT_DEGREE_CAP):
        if self.side == "left":
            return compose(A, self.X, degree_cap), compose(B, self.Y, degree_cap)
        return compose(self.X, A, degree_cap), compose(self.Y, B, degree_cap)

    def to_json(self, A, B, degree_cap=DEFAULT_DEGREE_CAP) -> dict:
        lhs, rhs = self.sides(A, B, degree_cap)
        return {
            "side": self.side,
            "X": function_to_json(self.X),
            "Y": function_to_json(self.Y),
            "lhs": function_to_json(lhs),
            "rhs": function_to_json(rhs),
            "verified": lhs == rhs,
        }


def verify_reversibility(A: RationalFunction, B: RationalFunction, w: ReversibilityWitness,
                         degree_cap=DEFAULT_DEGREE_CAP) -> bool:
    lhs, rhs = w.sides(A, B, degree_cap)
    return lhs == rhs


def left_witness_from_iterates(A: RationalFunction, B: RationalFunction, k: int, l: int,
                               degree_cap=DEFAULT_DEGREE_CAP) -> ReversibilityWitness:
    """From A^k == B^l: X = A^(k-1), Y = B^(l-1); (k, l) is doubled first
    when either is 1 so both factors have degree >= 2."""
    if k == 1 or l == 1:
        k, l = 2 * k, 2 * l
    return ReversibilityWitness("left", iterate(A, k - 1, degree_cap), iterate(B, l - 1, degree_cap))


def right_reversibility_equalities(A: RationalFunction, B: RationalFunction, bound: int,
                                   degree_cap=DEFAULT_DEGREE_CAP) -> tuple[int, int] | None:
    """First (k, l) with A^(2k) == A^k o B^l and B^(2l) == B^l o A^k."""
    if A.degree < 2 or B.degree < 2:
        raise ValueError("degrees must be >= 2")
    Ai, Bi = _Iterates(A, degree_cap), _Iterates(B, degree_cap)
    for k, l in _degree_pairs(A.degree, B.degree, bound):
        Ak, Bl = Ai(k), Bi(l)
        if (compose(Ak, Ak, degree_cap) == compose(Ak, Bl, degree_cap)
                and compose(Bl, Bl, degree_cap) == compose(Bl, Ak, degree_cap)):
            return k, l
    return None


@dataclass(frozen=True)
class Relation:
    """Two distinct words (leftmost letter applied last) with equal compositions."""

    left: str
    right: str
    value: RationalFunction

    def to_json(self) -> dict:
        return {"left": self.left, "right": self.right, "value": function_to_json(self.value)}


def _strip_common_suffix(u: str, v: str) -> tuple[str, str]:
    # right cancellation: X o C == Y o C implies X == Y for nonconstant C
    while u and v and u[-1] == v[-1]:
        u, v = u[:-1], v[:-1]
    return u, v


def free_pair_certificate(A: RationalFunction, B: RationalFunction, word_length: int,
                          degree_cap=DEFAULT_DEGREE_CAP) -> Relation | None:
    """Shortest relation between words in A, B of length <= word_length.

    Words are grouped by degree and compared by exact value.  The reported
    pair is normalized by cancelling common rightmost letters, so the two
    words end in different letters.
    """
    if A.degree < 2 or B.degree < 2:
        raise ValueError("degrees must be >= 2")
    letters = {"A": A, "B": B}
    seen: dict[RationalFunction, str] = {}
    values = {"": RationalFunction.identity()}
    for length in range(1, word_length + 1):
        layer = {}
        for w in ("".join(t) for t in product("AB", repeat=length)):
            value = compose(letters[w[0]], values[w[1:]], degree_cap)
            layer[w] = value
        found = None
        for w, value in layer.items():
            other = seen.get(value)
            if other is not None:
                u, v = _strip_common_suffix(other, w)
                if u and v:
                    found = Relation(u, v, _word_value(u, letters, degree_cap))
                    break
            seen[value] = w
        if found is not None:
            return found
        values.update(layer)
    return None


def _word_value(w: str, letters, degree_cap) -> RationalFunction:
    out = RationalFunction.identity()
    for ch in reversed(w):
        out = compose(letters[ch], out, degree_cap)
    return out
