"""Commuting functions of a non-special polynomial and the finite group G_P.

Candidates come from the Bottcher coordinate phi of a monic centered P: a
polynomial X of degree d commutes with P exactly when
phi o X o phi^-1 = eps z^d with eps^(n-1) = 1.  Every candidate read off the
truncated series is confirmed by exact composition before it is kept.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .affine import aut_group, normal_form
from .decomposition import is_decomposable, right_factor_quotient
from .numbers import common_field, root_of_unity
from .poly import Polynomial
from .rational import (
    DEFAULT_DEGREE_CAP,
    DegreeCapExceeded,
    Mobius,
    RationalFunction,
    compose,
    conjugate,
    iterate,
)
from .series import LaurentSeries, bottcher_expand, series_inverse
from .special import SpecialInputError, is_special_polynomial

__all__ = [
    "CommutantClass",
    "GroupTable",
    "TruncationError",
    "aut_group",
    "bottcher_expand",
    "cinf_membership",
    "class_equal",
    "commutant_enumerate",
    "commutes",
    "group_table",
    "reduce_class",
]


class TruncationError(ArithmeticError):
    def __init__(self, order: int, degree: int):
        super().__init__(f"series truncation order {order} insufficient for degree {degree}")
        self.order = order
        self.degree = degree


class GroupClosureError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CommutantClass:
    """A class of ~P: every member is representative o P^l."""

    representative: RationalFunction
    members: tuple[RationalFunction, ...] = ()

    @property
    def class_degree(self) -> int:
        return self.representative.degree

    @property
    def field_label(self) -> str:
        f = self.representative.coefficient_field()
        return "Q" if f is None else f.label


def commutes(X: RationalFunction, P: RationalFunction, degree_cap=DEFAULT_DEGREE_CAP) -> bool:
    return compose(X, P, degree_cap) == compose(P, X, degree_cap)


def _prepare(P) -> tuple[Polynomial, Mobius | None]:
    F = P if isinstance(P, RationalFunction) else RationalFunction(P)
    if not F.is_polynomial():
        raise ValueError("commutant enumeration is implemented for polynomials only")
    report = is_special_polynomial(F)
    if report.is_special:
        raise SpecialInputError(f"input is {report.kind.value}")
    p = F.num
    if p.lead == 1 and p[p.degree - 1] == 0:
        return p, None
    form, mu = normal_form(p)
    if form.lead != 1:
        raise ValueError("P is not conjugate to a monic polynomial over Q; conjugate it first")
    return form, mu


def _candidates(Pn: Polynomial, max_degree: int, order: int):
    n = Pn.degree
    phi = bottcher_expand(Pn, order).series()
    psi = series_inverse(phi)
    powers = [None, phi]
    for _ in range(2, max_degree + 1):
        powers.append(powers[-1] * phi)
    roots = [root_of_unity(n - 1, j) for j in range(n - 1)]
    for d in range(1, max_degree + 1):
        for eps in roots:
            X = psi.compose(powers[d] * eps)
            yield d, eps, X


def commutant_elements(P, max_degree: int, order: int | None = None, retries: int = 2) -> list[RationalFunction]:
    """All X of degree <= max_degree with X o P == P o X (verified exactly)."""
    Pn, mu = _prepare(P)
    PR = RationalFunction(Pn)
    n = Pn.degree
    order = order or max_degree + n + 8
    for attempt in range(retries + 1):
        found, suspicious = [], None
        for d, eps, X in _candidates(Pn, max_degree, order):
            if X.prec < d + 2:
                suspicious = d
                continue
            if not X.negative_part_vanishes():
                continue
            cand = RationalFunction(X.polynomial_part())
            if cand.degree == d and commutes(cand, PR, None):
                found.append(cand)
            else:
                suspicious = d
        if suspicious is None:
            break
        if attempt == retries:
            raise TruncationError(order, suspicious)
        order *= 2
    if mu is not None:
        back = mu.inverse()
        found = [conjugate(X, back, None) for X in found]
    return sorted(found, key=_sort_key)


def _sort_key(F: RationalFunction):
    return (F.degree, [repr(c) for c in F.num.coeffs])


def reduce_class(X: RationalFunction, P: RationalFunction) -> tuple[RationalFunction, int]:
    """(X0, l) with X = X0 o P^l and P not a right factor of X0."""
    l = 0
    while X.degree >= P.degree:
        Y = right_factor_quotient(X, P)
        if Y is None:
            break
        X, l = Y, l + 1
    return X, l


def commutant_enumerate(P, max_degree: int, order: int | None = None) -> list[CommutantClass]:
    """Classes of ~P met by commuting functions of degree <= max_degree.

    Complete only up to the degree bound.
    """
    F = P if isinstance(P, RationalFunction) else RationalFunction(P)
    elems = commutant_elements(F, max_degree, order)
    classes: dict[RationalFunction, list[RationalFunction]] = {}
    for X in elems:
        X0, _ = reduce_class(X, F)
        classes.setdefault(X0, []).append(X)
    out = [CommutantClass(X0, tuple(members)) for X0, members in classes.items()]
    return sorted(out, key=lambda c: _sort_key(c.representative))


@dataclass(frozen=True)
class ClassEqualResult:
    equal: bool
    l1: int | None = None
    l2: int | None = None
    bound_reached: bool = False

    def __bool__(self):
        return self.equal


def class_equal(Q1: RationalFunction, Q2: RationalFunction, P: RationalFunction, l_max: int,
                degree_cap=DEFAULT_DEGREE_CAP) -> ClassEqualResult:
    """Is Q1 o P^l1 == Q2 o P^l2 for some l1, l2 <= l_max?

    Pairs violating deg Q1 n^l1 == deg Q2 n^l2 are pruned without composing.
    ``bound_reached`` is set when the degree relation leaves feasible pairs
    beyond the bound.
    """
    n = P.degree
    d1, d2 = Q1.degree, Q2.degree
    iterates = {0: RationalFunction.identity()}

    def it(k):
        if k not in iterates:
            iterates[k] = iterate(P, k, degree_cap)
        return iterates[k]

    feasible_beyond = False
    for l1 in range(l_max + 1):
        for l2 in range(l_max + 1):
            if d1 * n ** l1 != d2 * n ** l2:
                continue
            try:
                lhs = compose(Q1, it(l1), degree_cap) if l1 else Q1
                rhs = compose(Q2, it(l2), degree_cap) if l2 else Q2
            except DegreeCapExceeded:
                feasible_beyond = True
                continue
            if lhs == rhs:
                return ClassEqualResult(True, l1, l2)
    # the degree relation fixes l1 - l2; a feasible pair exists at every shift
    if any(d1 * n ** a == d2 for a in range(l_max + 1)) or any(d2 * n ** a == d1 for a in range(l_max + 1)):
        feasible_beyond = True
    return ClassEqualResult(False, bound_reached=feasible_beyond)


@dataclass
class GroupTable:
    elements: list[CommutantClass]
    table: list[list[int]]
    identity_index: int
    aut_order: int
    indecomposable: bool
    notes: list[str] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)

    def inverse(self, i: int) -> int:
        return next(j for j in range(self.order) if self.table[i][j] == self.identity_index)

    def verify_axioms(self) -> bool:
        m = self.order
        T = self.table
        e = self.identity_index
        if any(T[e][i] != i or T[i][e] != i for i in range(m)):
            return False
        identities = [k for k in range(m) if all(T[k][i] == i and T[i][k] == i for i in range(m))]
        if identities != [e]:
            return False
        for i in range(m):
            if not any(T[i][j] == e and T[j][i] == e for j in range(m)):
                return False
        for a, b, c in itertools.product(range(m), repeat=3):
            if T[T[a][b]][c] != T[a][T[b][c]]:
                return False
        return True

    def is_abelian(self) -> bool:
        m = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(m) for j in range(m))

    def is_metacyclic(self) -> bool:
        """Some cyclic normal subgroup N has a cyclic quotient."""
        m, T, e = self.order, self.table, self.identity_index

        def cyclic(g):
            out, x = [e], g
            while x != e:
                out.append(x)
                x = T[x][g]
            return frozenset(out)

        for g in range(m):
            N = cyclic(g)
            normal = all(
                T[T[h][n]][self.inverse(h)] in N for h in range(m) for n in N
            )
            if not normal:
                continue
            # quotient is cyclic if some coset generates all cosets
            for h in range(m):
                cover, x = set(N), h
                for _ in range(m):
                    cover |= {T[x][n] for n in N}
                    x = T[x][h]
                if len(cover) == m:
                    return True
        return False

    def to_json(self) -> dict:
        from .exchange import function_to_json

        return {
            "elements": [function_to_json(c.representative) for c in self.elements],
            "table": self.table,
            "identity_index": self.identity_index,
            "order": self.order,
            "aut_order": self.aut_order,
            "indecomposable": self.indecomposable,
            "notes": self.notes,
        }


def group_table(P, max_degree: int, l_max: int = 4) -> GroupTable:
    """Cayley table of G_P on the classes found up to ``max_degree``.

    Products are reduced to their class representative by stripping right
    factors P; a product landing outside the found classes raises
    GroupClosureError.
    """
    F = P if isinstance(P, RationalFunction) else RationalFunction(P)
    classes = commutant_enumerate(F, max_degree)
    reps = [c.representative for c in classes]
    index = {X: i for i, X in enumerate(reps)}
    table = []
    for A in reps:
        row = []
        for B in reps:
            Z, _ = reduce_class(compose(A, B, None), F)
            j = index.get(Z)
            if j is None:
                j = next((k for k, R in enumerate(reps) if class_equal(Z, R, F, l_max)), None)
            if j is None:
                raise GroupClosureError(f"product class of degree {Z.degree} not among found classes")
            row.append(j)
        table.append(row)
    ident = RationalFunction.identity()
    if ident not in index:
        raise GroupClosureError("identity class missing")
    g = GroupTable(classes, table, index[ident], len(aut_group(F.num)), not is_decomposable(F))
    if not g.verify_axioms():
        raise GroupClosureError("table fails the group axioms")
    if g.indecomposable and g.order != g.aut_order:
        raise GroupClosureError(f"indecomposable P but |G_P|={g.order} != |Aut(P)|={g.aut_order}")
    if common_field(c for X in reps for c in X.num.coeffs) is not None:
        g.notes.append("some representatives are defined over a cyclotomic field")
    return g


def cinf_membership(X: RationalFunction, P: RationalFunction, s_max: int,
                    degree_cap=DEFAULT_DEGREE_CAP) -> int | None:
    """Smallest s <= s_max with X o P^s == P^s o X, else None."""
    if X.degree < 1 or P.degree < 1:
        raise ValueError("degrees must be >= 1")
    Ps = P
    for s in range(1, s_max + 1):
        if s > 1:
            Ps = compose(P, Ps, degree_cap)
        if compose(X, Ps, degree_cap) == compose(Ps, X, degree_cap):
            return s
    return None


def laurent_of(F: RationalFunction, prec: int) -> LaurentSeries:
    return LaurentSeries.from_polynomial(F.num, prec)
