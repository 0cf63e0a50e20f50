"""Affine conjugacy of polynomials.

Everything reduces to centered polynomials (vanishing z^(n-1) coefficient),
which are reached from any polynomial by a rational translation.  Between
centered polynomials the only affine conjugacies are scalings z -> a z, and
the coefficient equations ``c_k a^(1-k) = d_k`` pin down ``a^g`` for
``g = gcd(k - 1)`` over the support.  So the decision is exact over Q, and a
witness needs at most the ring Q[x]/(x^g - t).
"""
from __future__ import annotations

import math
from fractions import Fraction

from .numbers import radical_ring, rational_root, root_of_unity
from .poly import Polynomial
from .rational import Mobius, RationalFunction, compose, conjugate


def _require_poly(P) -> Polynomial:
    if isinstance(P, RationalFunction):
        if not P.is_polynomial():
            raise ValueError("expected a polynomial")
        return P.num
    if isinstance(P, Polynomial):
        return P
    raise TypeError(f"expected a polynomial, got {type(P).__name__}")


def centering(P) -> tuple[Polynomial, Mobius]:
    """(Pc, tau) with Pc = tau o P o tau^-1 centered and tau a translation."""
    p = _require_poly(P)
    n = p.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    beta = p[n - 1] / (n * p.lead)
    tau = Mobius.affine(1, beta)
    pc = conjugate(RationalFunction(p), tau).num
    return pc, tau


def _bezout(values: list[int]) -> tuple[int, list[int]]:
    """gcd of ``values`` and integer coefficients realizing it."""
    g, coef = 0, []
    for v in values:
        if g == 0:
            g, coef = abs(v), [1 if v >= 0 else -1]
            continue
        sign = 1 if v >= 0 else -1
        old_r, r = g, abs(v)
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        coef = [c * old_s for c in coef] + [old_t * sign]
        g = old_r
    return g, coef


def scaling_between(pc: Polynomial, qc: Polynomial):
    """A scalar ``a`` with a*pc(z/a) == qc, or None.  Both must be centered."""
    if pc.degree != qc.degree:
        return None
    if pc.support() != qc.support():
        return None
    exps, vals = [], []
    for k in pc.support():
        if k == 1:
            if pc[1] != qc[1]:
                return None
            continue
        exps.append(k - 1)
        vals.append(pc[k] / qc[k])
    g, coef = _bezout(exps)
    t = Fraction(1)
    for v, u in zip(vals, coef):
        t = t * v ** u
    for e, v in zip(exps, vals):
        if t ** (e // g) != v:
            return None
    if g == 1:
        return t
    if not isinstance(t, Fraction):
        raise NotImplementedError("radical witnesses over number fields are not supported")
    a = rational_root(t, g)
    if a is None:
        a = radical_ring(g, t).gen()
    return a


def conjugacy_test(P, Q) -> Mobius | None:
    """An affine mu with conjugate(P, mu) == Q, or None.

    Decided exactly; the returned witness is verified by recomposition.
    """
    p, q = _require_poly(P), _require_poly(Q)
    if p.degree != q.degree or p.degree < 2:
        raise ValueError("conjugacy_test needs polynomials of equal degree >= 2")
    pc, tau_p = centering(p)
    qc, tau_q = centering(q)
    a = scaling_between(pc, qc)
    if a is None:
        return None
    mu = tau_q.inverse() @ Mobius.affine(a) @ tau_p
    if conjugate(RationalFunction(p), mu) != RationalFunction(q):
        raise AssertionError("conjugacy witness failed exact verification")
    return mu


def are_conjugate(P, Q) -> bool:
    p, q = _require_poly(P), _require_poly(Q)
    if p.degree != q.degree:
        return False
    return conjugacy_test(p, q) is not None


def aut_group(P, candidates: list[Mobius] | None = None) -> list[Mobius]:
    """Affine Mobius maps commuting with the polynomial ``P``.

    For a centered polynomial these are z -> zeta z with zeta^g = 1, where g
    is the gcd of (k - 1) over the support.  For a non-polynomial ``P`` only
    supplied ``candidates`` are checked.  Power-conjugate polynomials also
    commute with non-affine maps (z^n with 1/z); those are not listed.
    """
    if isinstance(P, RationalFunction) and not P.is_polynomial():
        if candidates is None:
            raise ValueError("non-polynomial input needs a candidate list")
        return [mu for mu in candidates if _commutes(P, mu)]
    p = _require_poly(P)
    if candidates is not None:
        F = RationalFunction(p)
        return [mu for mu in candidates if _commutes(F, mu)]
    pc, tau = centering(p)
    exps = [k - 1 for k in pc.support() if k != 1]
    g = 0
    for e in exps:
        g = math.gcd(g, abs(e))
    out = []
    F = RationalFunction(p)
    for j in range(g):
        zeta = root_of_unity(g, j)
        mu = tau.inverse() @ Mobius.affine(zeta) @ tau
        if not _commutes(F, mu):
            raise AssertionError("automorphism failed exact verification")
        out.append(mu)
    return out


def _commutes(F: RationalFunction, mu: Mobius) -> bool:
    m = mu.to_rational()
    return compose(m, F) == compose(F, m)


def normal_form(P) -> tuple[Polynomial, Mobius]:
    """Deterministic representative of the affine conjugacy class over Q.

    Centered, and monic whenever the leading coefficient has a rational
    (n-1)-th root; otherwise the leading coefficient is left as is.
    Returns (form, mu) with conjugate(P, mu) == form.
    """
    pc, tau = centering(P)
    n = pc.degree
    lead = pc.lead
    mu = tau
    if isinstance(lead, Fraction):
        a = rational_root(lead, n - 1)
        if a is not None and a != 0:
            scale = Mobius.affine(a)
            pc = conjugate(RationalFunction(pc), scale).num
            mu = scale @ tau
    return pc, mu
