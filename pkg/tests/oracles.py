"""Independent reference computations built directly on sympy.

None of these import the package under test; they are deliberately naive.
"""
from __future__ import annotations

from fractions import Fraction

import sympy

z = sympy.Symbol("z")


def _num(c):
    if isinstance(c, Fraction):
        return sympy.Rational(c.numerator, c.denominator)
    return sympy.sympify(c)


def sym_poly(coeffs) -> sympy.Expr:
    """Ascending coefficients (Fractions, ints or sympy numbers) to an expression in z."""
    return sympy.Add(*[_num(c) * z ** i for i, c in enumerate(coeffs)])


def chebyshev(n: int) -> list[Fraction]:
    """Ascending coefficients of T_n from sympy's own Chebyshev implementation."""
    p = sympy.Poly(sympy.chebyshevt(n, z), z)
    out = [Fraction(0)] * (p.degree() + 1)
    for (k,), c in p.terms():
        out[k] = Fraction(int(c.p), int(c.q))
    return out


def _compose(F: sympy.Expr, G: sympy.Expr) -> sympy.Expr:
    return sympy.expand(F.subs(z, G))


def commuting_polynomials(P_coeffs, d: int) -> list[tuple]:
    """Every polynomial X of degree d with X o P == P o X.

    The leading coefficient a solves a^(n-1) = p^(d-1); comparing the
    coefficients of z^(nd-k), k = 1..d, the unknown x_(d-k) enters linearly
    with coefficient n p a^(n-1) and everything else is already known, so
    the system is solved top down.  Survivors are checked in full.
    """
    P = sym_poly(P_coeffs)
    Pp = sympy.Poly(P, z)
    n, p = Pp.degree(), Pp.LC()
    a = sympy.Symbol("a")
    xs = sympy.symbols(f"x0:{d}")
    out = []
    for lead in sympy.roots(a ** (n - 1) - p ** (d - 1), a, multiple=True):
        vals = {}
        for k in range(1, d + 1):
            X = lead * z ** d + sum(xs[j] * z ** j for j in range(d))
            diff = sympy.expand(_compose(P, X) - _compose(X, P)).subs(vals)
            eq = sympy.Poly(diff, z).coeff_monomial(z ** (n * d - k))
            sol = sympy.solve(sympy.expand(eq), xs[d - k], dict=True)
            if len(sol) != 1:
                break
            vals[xs[d - k]] = sympy.simplify(sol[0][xs[d - k]])
        else:
            X = lead * z ** d + sum(vals[xs[j]] * z ** j for j in range(d))
            residual = sympy.Poly(sympy.expand(_compose(P, X) - _compose(X, P)), z)
            if all(sympy.simplify(c) == 0 for c in residual.all_coeffs()):
                coeffs = sympy.Poly(X, z).all_coeffs()[::-1]
                out.append(tuple(sympy.nsimplify(sympy.simplify(c)) for c in coeffs))
    return out


def commutant(P_coeffs, max_degree: int) -> list[tuple]:
    out = []
    for d in range(1, max_degree + 1):
        out.extend(commuting_polynomials(P_coeffs, d))
    return out


def class_representatives(P_coeffs, elements: list[tuple]) -> list[tuple]:
    """Elements that are not Y o P for another element Y."""
    P = sym_poly(P_coeffs)
    n = sympy.Poly(P, z).degree()
    exprs = {e: sym_poly(e) for e in elements}
    reps = []
    for e, X in exprs.items():
        d = len(e) - 1
        reducible = any(len(f) - 1 == d // n and d % n == 0
                        and sympy.expand(_compose(Y, P) - X) == 0
                        for f, Y in exprs.items() if f != e)
        if not reducible:
            reps.append(e)
    return reps


def to_fractions(coeffs) -> tuple:
    out = []
    for c in coeffs:
        c = sympy.nsimplify(c)
        if not c.is_Rational:
            raise ValueError(f"non-rational coefficient {c}")
        out.append(Fraction(int(c.p), int(c.q)))
    return tuple(out)


# -- plane curve genus -------------------------------------------------------------

def _singular_in_chart(G, X, Y, Z, fix):
    grads = [G, sympy.diff(G, X), sympy.diff(G, Y), sympy.diff(G, Z)]
    free = [v for v in (X, Y, Z) if v is not fix]
    eqs = [sympy.expand(g.subs(fix, 1)) for g in grads]
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return True
    basis = sympy.groebner(eqs, *free, order="lex")
    return list(basis.exprs) != [1]


def plane_curve_min_genus(A_coeffs) -> dict:
    """Minimal genus over the complex components of (A(x) - A(y))/(x - y) = 0.

    Handles curves of degree <= 3 (A of degree <= 4): lines and conics have
    genus 0; a cubic has genus 1 iff its projective closure is smooth, and a
    singular cubic has only rational components.
    """
    x, y, Zs = sympy.symbols("x y Z")
    A = sym_poly(A_coeffs)
    f = sympy.cancel((A.subs(z, x) - A.subs(z, y)) / (x - y))
    f = sympy.expand(f)
    _, factors = sympy.factor_list(f, x, y)
    genera, details = [], []
    for g, _mult in factors:
        e = sympy.Poly(g, x, y).total_degree()
        if e <= 2:
            genera.append(0)
            details.append({"factor": str(g), "degree": e, "smooth_cubic": False})
            continue
        if e != 3:
            raise NotImplementedError("oracle handles factors of degree <= 3")
        G = sympy.expand(Zs ** 3 * g.subs({x: x / Zs, y: y / Zs}))
        singular = any(_singular_in_chart(G, x, y, Zs, fix) for fix in (Zs, x, y))
        genera.append(0 if singular else 1)
        details.append({"factor": str(g), "degree": e, "smooth_cubic": not singular})
    return {"curve": str(f), "min_genus": min(genera), "factors": details,
            "verdict": "wild" if min(genera) <= 1 else "tame"}
