import numpy as np
import pytest

from ratsemi import Polynomial, RationalFunction, poly
from ratsemi.monodromy import (
    HAVE_COMPILED,
    Chain,
    analyze_curve,
    critical_values,
    cycle_notation,
    cycle_type,
    fiber_components,
    genus_scan,
    get_kernel,
    monodromy_system,
    tame_check,
)
from ratsemi.monodromy.tracking import perm_inverse, perm_then
from ratsemi.special import chebyshev


def test_permutation_helpers():
    p, q = (1, 0, 2), (0, 2, 1)
    assert perm_then(p, q) == (2, 0, 1)
    assert perm_then(p, perm_inverse(p)) == (0, 1, 2)
    assert cycle_type((1, 2, 0, 3)) == [3, 1]
    assert cycle_notation((1, 0, 2)) == "(1 2)"


def test_chain_evaluation_and_fiber():
    ch = Chain([poly(1, 0, 1), poly(0, -1, 0, 1)])
    x = 0.3 + 0.2j
    inner = x ** 2 + 1  # factors[0] is applied first
    assert abs(ch.evaluate(x) - (inner ** 3 - inner)) < 1e-12
    fib = ch.fiber(2.0 + 1.0j)
    assert len(fib) == 6
    assert max(abs(ch.evaluate(y) - (2 + 1j)) for y in fib) < 1e-9


def test_critical_values():
    cv = critical_values(poly(0, -3, 0, 1))
    assert sorted(v.real for v in cv.values) == [-2.0, 2.0] and cv.infinity
    assert len(Chain.iterate(poly(1, 0, 1), 2).critical_values()) == 2


def test_cubic_monodromy():
    s = monodromy_system([poly(0, 0, 0, 1)])
    (cov,) = s.coverings
    assert cycle_type(cov.perms[0]) == [3]
    assert s.product_relation_holds()
    s = monodromy_system([poly(0, -3, 0, 1)])
    assert sorted(cycle_type(p) for p in s.coverings[0].perms[:2]) == [[2, 1], [2, 1]]
    assert s.to_json()["certification"] == "numerically certified"


def test_seed_changes_base_but_not_validity():
    a = monodromy_system([poly(2, 0, -3, 1, 1)], seed=0)
    b = monodromy_system([poly(2, 0, -3, 1, 1)], seed=5)
    assert a.product_relation_holds() and b.product_relation_holds()


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
def test_compiled_and_python_kernels_agree():
    ch = Chain([poly(1, 0, 1), poly(0, 1, 0, 1)])
    pack = ch.pack("double")
    rng = np.random.default_rng(0)
    xs = rng.normal(size=12) + 1j * rng.normal(size=12)
    c = complex(ch.evaluate(complex(xs[0]))) + 1e-3
    fast, slow = get_kernel("compiled"), get_kernel("python")
    a, b = xs.copy(), xs.copy()
    ra = fast.newton_batch(*pack, a, c, 1e-12, 50)
    rb = slow.newton_batch(*pack, b, c, 1e-12, 50)
    assert ra[0] == rb[0]
    assert np.allclose(a, b, atol=1e-9)
    for covs in ([poly(0, -3, 0, 1)], [Chain.iterate(poly(1, 0, 1), 2), poly(0, 1, 0, 1)]):
        s1 = monodromy_system(covs, kernel="compiled")
        s2 = monodromy_system(covs, kernel="python")
        assert [c.perms for c in s1.coverings] == [c.perms for c in s2.coverings]


def test_components_of_power_pair():
    comps = fiber_components(poly(0, 0, 1), poly(0, 0, 1))
    assert sorted((c.degree_x, c.degree_y) for c in comps) == [(1, 1), (1, 1)]


def test_genus_of_generic_pair():
    rep = analyze_curve(poly(1, 0, 1), poly(0, -2, 0, 1))
    assert [c.genus for c in rep.components] == [1]


def test_rational_self_pair_splits():
    F = RationalFunction(Polynomial([1, 0, 1]), Polynomial([0, 1]))
    comps = fiber_components(F, F)
    assert len(comps) == 2 and all(c.genus == 0 for c in comps)


def test_tame_and_scan():
    v = tame_check(poly(0, 0, 0, 1))
    assert v.verdict == "wild" and v.genera == [0, 0]
    cells = genus_scan(poly(1, 0, 1), poly(0, -2, 0, 1), 1, 1, fiber_cap=81)
    assert [cell.genera for cell in cells] == [(1,)]


def test_chebyshev_pair_rational():
    comps = fiber_components(RationalFunction(chebyshev(2)), RationalFunction(chebyshev(3)))
    assert [(c.degree, c.genus) for c in comps] == [(6, 0)]
