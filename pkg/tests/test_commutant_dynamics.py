from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ratsemi import RationalFunction, compose, iterate, poly
from ratsemi.commutant import (
    TruncationError,
    cinf_membership,
    class_equal,
    commutant_elements,
    commutant_enumerate,
    commutes,
    group_table,
    reduce_class,
)
from ratsemi.dynamics import (
    PreconditionError,
    ReversibilityWitness,
    build_from_fiber_pair,
    check_sisis,
    common_iterate,
    even_construction,
    free_pair_certificate,
    right_reversibility_equalities,
    search_sisis,
    verify_reversibility,
)
from ratsemi.series import LaurentSeries, bottcher_expand, series_inverse
from ratsemi.special import SpecialInputError, chebyshev


# -- series --------------------------------------------------------------------------

def test_bottcher_coefficients():
    b = bottcher_expand(poly(1, 0, 1).num, 8)
    assert b.coeffs[:4] == (0, Fraction(1, 2), 0, Fraction(1, 8))
    assert b.check_identity()
    with pytest.raises(ValueError):
        bottcher_expand(poly(1, 1, 1).num, 4)


def test_bottcher_against_sympy():
    # phi(P(z)) = phi(z)^3 with c_k first entering at z^(3-k); solved top down
    w, u = sympy.symbols("w u")
    cs = sympy.symbols("c1:4")
    phi = lambda t: t + sum(c * t ** (1 - i) for i, c in enumerate(cs, 1))
    P = w ** 3 + w + 2
    expr = sympy.expand((phi(P) - phi(w) ** 3).subs(w, 1 / u) * u ** 3)
    series = sympy.series(expr, u, 0, 5).removeO()
    vals = {}
    for k, c in enumerate(cs, 1):
        eq = sympy.expand(series.coeff(u, k)).subs(vals)
        vals[c] = sympy.solve(eq, c)[0]
    expected = tuple(Fraction(str(vals[c])) for c in cs)
    assert bottcher_expand(poly(2, 1, 0, 1).num, 5).coeffs[:3] == expected


def test_series_inverse_composes_to_identity():
    phi = bottcher_expand(poly(1, 0, 1).num, 10).series()
    psi = series_inverse(phi)
    ident = phi.compose(psi).truncate(phi.prec)
    assert ident.coeffs[0] == 1 and all(c == 0 for c in ident.coeffs[1:])


def test_laurent_arithmetic():
    s = LaurentSeries(1, [1, 2, 3])
    assert (s * s.inverse()).truncate(3) == LaurentSeries(0, [1, 0, 0])
    assert (s.root(1)) == s
    r = (s * s).root(2).truncate(3)
    assert r == s


# -- commutant -----------------------------------------------------------------------

def test_commutant_small():
    P = poly(1, 0, 1)
    els = commutant_elements(P, 4)
    assert els == [poly(0, 1), P, iterate(P, 2)]
    assert all(commutes(X, P) for X in els)
    assert [c.representative for c in commutant_enumerate(P, 4)] == [poly(0, 1)]


def test_commutant_matches_oracle_on_cubic():
    P = poly(0, 1, 0, 1)
    expected = {oracles.to_fractions(e) for e in oracles.commutant([0, 1, 0, 1], 3)}
    assert {X.num.coeffs for X in commutant_elements(P, 3)} == expected


def test_commutant_rejects_special_and_rational():
    with pytest.raises(SpecialInputError):
        commutant_elements(poly(0, 0, 1), 4)
    with pytest.raises(ValueError):
        commutant_elements(RationalFunction(poly(1, 0, 1).num, poly(0, 1).num), 4)


def test_truncation_error_carries_order():
    with pytest.raises(TruncationError) as info:
        commutant_elements(poly(1, 0, 1), 4, order=2, retries=0)
    assert info.value.order == 2


def test_commutant_conjugation_invariance():
    # z^2 + 2z + 2 is conjugate to z^2 + 1 by z -> z + 1
    P = poly(2, 2, 1)
    els = commutant_elements(P, 4)
    assert len(els) == 3 and all(commutes(X, P) for X in els)


def test_reduce_class_and_class_equal():
    P = poly(1, 0, 1)
    assert reduce_class(iterate(P, 3), P) == (poly(0, 1), 3)
    r = class_equal(poly(0, 1), P, P, 3)
    assert r.equal and (r.l1, r.l2) == (1, 0)
    r = class_equal(poly(0, 1), poly(0, -1), poly(0, -2, 0, 1), 3)
    assert not r.equal


def test_group_table_cubic():
    g = group_table(poly(0, -2, 0, 1), 9)
    assert g.order == 2 and g.is_abelian() and g.is_metacyclic()
    assert g.inverse(1) == 1
    doc = g.to_json()
    assert doc["order"] == 2


def test_cinf_membership():
    P = poly(0, -2, 0, 1)
    assert cinf_membership(poly(0, -1), P, 3) == 1
    assert cinf_membership(poly(0, 1, 1), P, 2) is None


# -- dynamics ------------------------------------------------------------------------

def test_sisis():
    F, G = poly(0, 0, 1), poly(0, 0, -1)
    assert check_sisis(F, G, 1, 1)
    assert search_sisis(poly(1, 0, 1), poly(-1, 0, 1), 3) is None
    w = search_sisis(F, G, 2)
    doc = w.to_json()
    assert doc["k"] == 1 and doc["l"] == 1


def test_fiber_pair_preconditions():
    with pytest.raises(PreconditionError):
        build_from_fiber_pair(poly(0, 0, 1), poly(0, 1), poly(1, 1))
    assert build_from_fiber_pair(poly(0, 0, 0, 1), poly(0, 1), poly(0, 1)) is not None


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3), st.sampled_from([1, 2, -1]))
@settings(max_examples=20, deadline=None)
def test_even_construction_property(cs, lead):
    U = poly(*cs, lead)
    for A, X, Y in even_construction(U):
        assert X != Y
        assert compose(A, X) == compose(A, Y)


def test_common_iterates():
    T2, T3 = RationalFunction(chebyshev(2)), RationalFunction(chebyshev(3))
    assert common_iterate(T2, T3, 6) is None
    P = poly(1, 0, 1)
    assert common_iterate(iterate(P, 2), iterate(P, 3), 4) == (3, 2)
    assert common_iterate(poly(0, 0, 1), poly(0, 0, 0, 0, 1), 2) == (2, 1)


def test_reversibility():
    A, B = poly(0, 0, 1), poly(0, 0, 0, 0, 1)
    w = ReversibilityWitness("left", poly(0, 0, 0, 0, 1), poly(0, 0, 1))
    assert verify_reversibility(A, B, w)
    assert w.to_json(A, B)["verified"]
    assert not verify_reversibility(A, B, ReversibilityWitness("right", poly(0, 1), poly(0, 1)))
    with pytest.raises(ValueError):
        ReversibilityWitness("up", A, B)
    assert right_reversibility_equalities(poly(0, 0, 1), poly(0, 0, -1), 3) == (1, 1)
    assert right_reversibility_equalities(poly(0, 0, 1), poly(0, 0, 0, 1), 3) is None


def test_free_pairs():
    r = free_pair_certificate(poly(0, 0, 1), poly(0, 0, 0, 0, 1), 2)
    assert (r.left, r.right) == ("B", "AA") and r.value == poly(0, 0, 0, 0, 1)
    r = free_pair_certificate(poly(0, 0, 1), poly(0, 0, -1), 3)
    assert r.left[-1] != r.right[-1]
    assert free_pair_certificate(poly(1, 0, 1), poly(-1, 0, 1), 3) is None
