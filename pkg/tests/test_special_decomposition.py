import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratsemi import Mobius, Polynomial, RationalFunction, compose, conjugate, poly
from ratsemi.affine import aut_group, conjugacy_test, normal_form
from ratsemi.classgraph import betti_rank, build_class_graph, elementary_transform
from ratsemi.decomposition import (
    all_splittings,
    is_decomposable,
    nontrivial_splittings,
    right_factor_quotient,
)
from ratsemi.special import SpecialInputError, SpecialKind, chebyshev, is_special_polynomial, power_map


# -- specialness ---------------------------------------------------------------------

def test_specialness_examples():
    rep = is_special_polynomial(poly(0, -3, 0, 1))
    assert rep.kind is SpecialKind.CHEBYSHEV
    assert conjugate(poly(0, -3, 0, 1), rep.witness) == RationalFunction(chebyshev(3))
    assert rep.witness == Mobius.affine(Fraction(1, 2))
    assert is_special_polynomial(poly(1, 0, 1)).kind is SpecialKind.NOT_SPECIAL
    assert is_special_polynomial(poly(2, -2, 1)).kind is SpecialKind.POWER
    assert is_special_polynomial(compose(poly(-2, 0, 1), poly(-2, 0, 1))).kind is SpecialKind.CHEBYSHEV
    assert is_special_polynomial(-RationalFunction(chebyshev(3))).kind is SpecialKind.NEG_CHEBYSHEV
    inv = RationalFunction(Polynomial([1]), Polynomial([0, 0, 1]))
    assert is_special_polynomial(inv).kind is SpecialKind.UNDECIDED
    assert power_map(-2) == inv


@given(st.integers(2, 7), st.integers(-3, 3).filter(bool), st.integers(-3, 3))
@settings(max_examples=25, deadline=None)
def test_conjugates_of_chebyshev_are_detected(n, a, b):
    mu = Mobius.affine(a, b)
    P = conjugate(RationalFunction(chebyshev(n)), mu)
    rep = is_special_polynomial(P)
    assert rep.is_special
    assert conjugate(P, rep.witness) == rep.normal_form


# -- conjugacy and automorphisms --------------------------------------------------------

def test_conjugacy_and_aut():
    assert conjugacy_test(poly(0, 0, 1), poly(2, -2, 1)) == Mobius.affine(1, 1)
    assert conjugacy_test(poly(1, 0, 1), poly(0, 0, 1)) is None
    assert set(aut_group(poly(0, -2, 0, 1))) == {Mobius.identity(), Mobius.affine(-1)}
    assert aut_group(poly(1, 0, 1)) == [Mobius.identity()]
    assert len(aut_group(poly(0, 1, 0, 0, 1))) == 3


def test_conjugacy_with_irrational_scaling():
    mu = conjugacy_test(poly(0, 0, 0, 0, 0, 0, 3), poly(0, 0, 0, 0, 0, 0, 1))
    assert mu is not None
    assert conjugate(poly(0, 0, 0, 0, 0, 0, 3), mu) == poly(0, 0, 0, 0, 0, 0, 1)


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=5), st.integers(-3, 3).filter(bool), st.integers(-3, 3))
@settings(max_examples=30, deadline=None)
def test_conjugacy_witness_is_exact(cs, a, b):
    P = poly(*cs, 1)
    Q = conjugate(P, Mobius.affine(a, b))
    mu = conjugacy_test(P, Q)
    assert mu is not None and conjugate(P, mu) == Q
    form, nu = normal_form(P.num)
    assert conjugate(P, nu) == RationalFunction(form)


# -- decomposition -------------------------------------------------------------------

def test_right_factor_quotient():
    assert right_factor_quotient(poly(1, 0, 0, 2, 0, 0, 1), poly(0, 0, 0, 1)) == poly(1, 2, 1)
    assert right_factor_quotient(poly(0, 0, 0, 0, 1), poly(0, 0, 0, 1)) is None
    assert right_factor_quotient(poly(1, 0, 0, 1), poly(0, 0, 1)) is None
    B = RationalFunction(Polynomial([1, 0, 1]), Polynomial([0, 1]))
    W = compose(poly(3, 1, 1), B)
    assert right_factor_quotient(W, B) == poly(3, 1, 1)


def test_splittings_examples():
    degrees = [c.degrees for c in nontrivial_splittings(poly(0, 0, 0, 0, 0, 0, 1))]
    assert sorted(degrees) == [(2, 3), (3, 2)]
    classes = nontrivial_splittings(poly(0, 0, -2, 0, 1))
    assert len(classes) == 1 and classes[0].right == poly(0, 0, 1)
    assert not is_decomposable(poly(1, 0, 0, 0, 0, 1))
    assert all(c.trivial for c in all_splittings(poly(1, 0, 1)))


def test_random_splittings_recompose():
    rng = random.Random(7)
    for _ in range(40):
        P = poly(*[rng.randint(-3, 3) for _ in range(6)], 1)
        for c in all_splittings(P):
            assert compose(c.left, c.right) == P


# -- class graph -------------------------------------------------------------------

def test_class_graphs():
    G = build_class_graph(poly(1, 0, 1))
    assert (len(G.vertices), len(G.edges), betti_rank(G)) == (1, 0, 0)
    G = build_class_graph(poly(0, 0, -2, 0, 1))
    assert (len(G.vertices), len(G.edges), betti_rank(G)) == (1, 1, 1)
    P = compose(poly(1, 0, 1), poly(0, 1, 0, 1))
    G = build_class_graph(P)
    assert (len(G.vertices), len(G.edges), betti_rank(G)) == (3, 4, 2)
    assert G.to_dot().startswith("digraph")
    with pytest.raises(SpecialInputError):
        build_class_graph(poly(0, 0, 0, 0, 1))


def test_edges_carry_exact_witnesses():
    P = compose(poly(1, 0, 1), poly(0, 1, 0, 1))
    G = build_class_graph(P)
    for e in G.edges:
        hat = elementary_transform(e.decomposition.representative)
        assert conjugate(hat, e.witness) == G.vertices[e.target]


def test_class_graph_invariant_under_conjugation():
    P = compose(poly(1, 0, 1), poly(0, 1, 0, 1))
    Q = conjugate(P, Mobius.affine(3, -2))
    assert build_class_graph(P).signature() == build_class_graph(Q).signature()
