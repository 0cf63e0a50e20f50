"""Function-exchange JSON format and a human-notation parser.

A function is ``{"num": [c0, c1, ...], "den": [...]}`` with ascending
coefficients; each coefficient is a string ``"p/q"`` or, for number-field
values, ``{"m": M, "coords": [...]}`` (cyclotomic) or
``{"modulus": [...], "coords": [...]}``.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .numbers import coeff_from_json, coeff_to_json
from .poly import Polynomial
from .rational import Mobius, RationalFunction


def function_to_json(F: RationalFunction) -> dict:
    return {
        "num": [coeff_to_json(c) for c in F.num.coeffs] or ["0"],
        "den": [coeff_to_json(c) for c in F.den.coeffs],
    }


def function_from_json(obj) -> RationalFunction:
    if isinstance(obj, str):
        obj = json.loads(obj)
    num = [coeff_from_json(c) for c in obj["num"]]
    den = [coeff_from_json(c) for c in obj.get("den", ["1"])]
    return RationalFunction(Polynomial(num), Polynomial(den))


def mobius_to_json(mu: Mobius) -> dict:
    return {k: coeff_to_json(getattr(mu, k)) for k in "abcd"}


def mobius_from_json(obj) -> Mobius:
    return Mobius(*(coeff_from_json(obj[k]) for k in "abcd"))


def parse_function(text: str) -> RationalFunction:
    """Parse an inline function: exchange JSON or notation like ``z^3 - 3*z``.

    Human notation accepts ``z`` (or ``x``) as the variable, ``^`` or ``**``
    for powers, and rational constants.  Only rational coefficients.
    """
    text = text.strip()
    if text.startswith("{"):
        return function_from_json(json.loads(text))
    import sympy

    expr = sympy.sympify(text.replace("^", "**"), locals={"z": sympy.Symbol("z"), "x": sympy.Symbol("x")})
    free = expr.free_symbols
    if len(free) > 1:
        raise ValueError(f"expected one variable, got {sorted(map(str, free))}")
    var = next(iter(free)) if free else sympy.Symbol("z")
    num, den = sympy.fraction(sympy.together(expr))

    def coeffs(e) -> list[Fraction]:
        p = sympy.Poly(sympy.expand(e), var, domain="QQ")
        out = [Fraction(0)] * (p.degree() + 1)
        for (k,), c in p.terms():
            out[k] = Fraction(int(c.numerator), int(c.denominator))
        return out

    try:
        return RationalFunction(Polynomial(coeffs(num)), Polynomial(coeffs(den)))
    except sympy.polys.polyerrors.PolynomialError as exc:
        raise ValueError(f"not a rational function over Q: {text!r}") from exc
