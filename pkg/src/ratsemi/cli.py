"""Command-line front end.

Every command prints one report (JSON by default) carrying the tool
version and the full run configuration.  Exit status: 0 success,
2 no witness within the bounds, 3 numeric precision failure, 4 invalid input.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .affine import aut_group
from .classgraph import betti_rank, build_class_graph
from .commutant import (
    GroupClosureError,
    TruncationError,
    cinf_membership,
    class_equal,
    commutant_enumerate,
    group_table,
)
from .decomposition import DecompositionError, all_splittings, right_factor_quotient
from .dynamics import (
    PreconditionError,
    ReversibilityWitness,
    build_from_fiber_pair,
    check_eq_system,
    check_sisis,
    common_iterate,
    even_construction,
    free_pair_certificate,
    left_witness_from_iterates,
    right_reversibility_equalities,
    search_sisis,
    verify_reversibility,
)
from .exchange import function_to_json, mobius_to_json, parse_function
from .monodromy import PrecisionError, analyze_curve, genus_scan, tame_check
from .rational import DEFAULT_DEGREE_CAP, DegreeCapExceeded, Mobius, RationalFunction, compose, iterate
from .special import SpecialInputError, chebyshev, is_special_polynomial

EXIT_OK, EXIT_NO_WITNESS, EXIT_PRECISION, EXIT_INVALID = 0, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    degree_cap: int = DEFAULT_DEGREE_CAP
    bound: int = 4
    precision: float = 1e-9
    fiber_cap: int = 81
    format: str = "json"
    seed: int = 0
    threads: int = 1

    def validate(self):
        for name in ("degree_cap", "bound", "fiber_cap", "threads"):
            if getattr(self, name) < 1:
                raise InvalidInput(f"--{name.replace('_', '-')} must be positive")
        if not 0 < self.precision < 1:
            raise InvalidInput("--precision must lie in (0, 1)")


class InvalidInput(ValueError):
    pass


class Outcome:
    def __init__(self, result: dict, status: int = EXIT_OK, text: str | None = None, dot: str | None = None):
        self.result, self.status, self.text, self.dot = result, status, text, dot


def fn(F: RationalFunction) -> dict:
    return {"exchange": function_to_json(F), "expanded": str(F)}


def read_function(arg: str) -> RationalFunction:
    text = arg
    if arg.startswith("@"):
        text = Path(arg[1:]).read_text()
    elif arg.endswith(".json") and os.path.exists(arg):
        text = Path(arg).read_text()
    try:
        return parse_function(text)
    except Exception as exc:
        raise InvalidInput(f"cannot parse function {arg!r}: {exc}") from exc


def _mobius(F: RationalFunction) -> Mobius:
    if F.degree != 1:
        raise InvalidInput("conjugating map must have degree 1")
    return Mobius.from_rational(F)


# -- commands ----------------------------------------------------------------------

def cmd_compose(a, cfg):
    F, G = read_function(a.F), read_function(a.G)
    H = compose(F, G, cfg.degree_cap)
    return Outcome({"F": fn(F), "G": fn(G), "F o G": fn(H)}, text=str(H))


def cmd_iterate(a, cfg):
    F = read_function(a.F)
    H = iterate(F, a.k, cfg.degree_cap)
    return Outcome({"F": fn(F), "k": a.k, "F^k": fn(H)}, text=str(H))


def cmd_conjugate(a, cfg):
    from .rational import conjugate

    F, mu = read_function(a.F), read_function(a.mu)
    H = conjugate(F, _mobius(mu), cfg.degree_cap)
    return Outcome({"F": fn(F), "mu": fn(mu), "mu o F o mu^-1": fn(H)}, text=str(H))


def cmd_chebyshev(a, cfg):
    T = RationalFunction(chebyshev(a.n))
    return Outcome({"n": a.n, "T_n": fn(T)}, text=str(T))


def cmd_special(a, cfg):
    P = read_function(a.P)
    rep = is_special_polynomial(P)
    res = {"P": fn(P), "kind": rep.kind.value, "special": rep.is_special}
    if rep.witness is not None:
        res["witness"] = mobius_to_json(rep.witness)
        res["normal_form"] = fn(rep.normal_form)
    return Outcome(res, text=rep.kind.value)


def cmd_decompose(a, cfg):
    P = read_function(a.P)
    classes = all_splittings(P)
    rows = [{"left": fn(c.left), "right": fn(c.right), "degrees": list(c.degrees), "trivial": c.trivial,
             "recomposed": fn(compose(c.left, c.right, None))} for c in classes]
    text = "\n".join(f"({c.left}) o ({c.right}){'  [trivial]' if c.trivial else ''}" for c in classes)
    return Outcome({"P": fn(P), "splittings": rows, "decomposable": any(not c.trivial for c in classes)},
                   text=text)


def cmd_right_factor(a, cfg):
    W, B = read_function(a.W), read_function(a.B)
    Y = right_factor_quotient(W, B)
    if Y is None:
        return Outcome({"W": fn(W), "B": fn(B), "Y": None}, EXIT_NO_WITNESS, "no right factor")
    return Outcome({"W": fn(W), "B": fn(B), "Y": fn(Y), "Y o B": fn(compose(Y, B, None))}, text=str(Y))


def cmd_gamma_graph(a, cfg):
    P = read_function(a.P)
    G = build_class_graph(P, max_vertices=a.max_vertices, include_trivial=a.include_trivial)
    res = G.to_json()
    res["betti_rank"] = betti_rank(G) if G.complete else None
    res["P"] = fn(P)
    status = EXIT_OK if G.complete else EXIT_NO_WITNESS
    text = f"{len(G.vertices)} vertices, {len(G.edges)} edges, betti {res['betti_rank']}"
    return Outcome(res, status, text, dot=G.to_dot())


def cmd_aut(a, cfg):
    P = read_function(a.P)
    group = aut_group(P)
    return Outcome({"P": fn(P), "order": len(group), "elements": [mobius_to_json(m) for m in group]},
                   text="\n".join(str(m) for m in group))


def cmd_commutant(a, cfg):
    P = read_function(a.P)
    classes = commutant_enumerate(P, cfg.bound)
    res = {
        "P": fn(P),
        "max_degree": cfg.bound,
        "classes_found": len(classes),
        "complete_up_to_degree": cfg.bound,
        "classes": [{"representative": fn(c.representative), "class_degree": c.class_degree,
                     "field": c.field_label, "members": [fn(m) for m in c.members]} for c in classes],
    }
    return Outcome(res, text="\n".join(str(c.representative) for c in classes))


def cmd_gp_table(a, cfg):
    P = read_function(a.P)
    g = group_table(P, cfg.bound, a.l_max)
    res = g.to_json()
    res["elements"] = [fn(c.representative) for c in g.elements]
    res["axioms_verified"] = g.verify_axioms()
    res["abelian"] = g.is_abelian()
    res["metacyclic"] = g.is_metacyclic()
    return Outcome(res, text=f"|G_P| = {g.order}")


def cmd_class_equal(a, cfg):
    Q1, Q2, P = read_function(a.Q1), read_function(a.Q2), read_function(a.P)
    r = class_equal(Q1, Q2, P, cfg.bound, cfg.degree_cap)
    res = {"Q1": fn(Q1), "Q2": fn(Q2), "P": fn(P), "l_max": cfg.bound, "equal": r.equal,
           "bound_reached": r.bound_reached}
    if r.equal:
        value = compose(Q1, iterate(P, r.l1, cfg.degree_cap), cfg.degree_cap) if r.l1 else Q1
        res.update(l1=r.l1, l2=r.l2, value=fn(value))
        return Outcome(res, text=f"equal (l1={r.l1}, l2={r.l2})")
    return Outcome(res, EXIT_NO_WITNESS, "not equal within bound")


def cmd_cinf(a, cfg):
    X, P = read_function(a.X), read_function(a.P)
    s = cinf_membership(X, P, cfg.bound, cfg.degree_cap)
    res = {"X": fn(X), "P": fn(P), "s_max": cfg.bound, "s": s}
    if s is None:
        return Outcome(res, EXIT_NO_WITNESS, "no s within bound")
    Ps = iterate(P, s, cfg.degree_cap)
    res["X o P^s"] = fn(compose(X, Ps, cfg.degree_cap))
    return Outcome(res, text=f"s = {s}")


def cmd_sisis(a, cfg):
    X, P = read_function(a.X), read_function(a.P)
    res = {"X": fn(X), "P": fn(P)}
    if a.k is not None and a.l is not None:
        ok = check_sisis(X, P, a.k, a.l, cfg.degree_cap)
        res.update(k=a.k, l=a.l, holds=ok)
        return Outcome(res, EXIT_OK if ok else EXIT_NO_WITNESS, "holds" if ok else "fails")
    w = search_sisis(X, P, cfg.bound, cfg.degree_cap)
    res["bound"] = cfg.bound
    if w is None:
        res["witness"] = None
        return Outcome(res, EXIT_NO_WITNESS, "no witness within bound")
    res["witness"] = w.to_json(cfg.degree_cap)
    return Outcome(res, text=f"k={w.k}, l={w.l}")


def cmd_eq_system(a, cfg):
    F, G = read_function(a.F), read_function(a.G)
    ok = check_eq_system(F, G, cfg.degree_cap)
    res = {"F": fn(F), "G": fn(G), "holds": ok,
           "F o F": fn(compose(F, F, cfg.degree_cap)), "F o G": fn(compose(F, G, cfg.degree_cap)),
           "G o G": fn(compose(G, G, cfg.degree_cap)), "G o F": fn(compose(G, F, cfg.degree_cap))}
    return Outcome(res, EXIT_OK if ok else EXIT_NO_WITNESS, "holds" if ok else "fails")


def cmd_fiber_pair(a, cfg):
    A, X, Y = read_function(a.A), read_function(a.X), read_function(a.Y)
    try:
        F, G = build_from_fiber_pair(A, X, Y, cfg.degree_cap)
    except PreconditionError as exc:
        raise InvalidInput(str(exc)) from exc
    return Outcome({"A": fn(A), "X": fn(X), "Y": fn(Y), "A o X": fn(compose(A, X, None)),
                    "F": fn(F), "G": fn(G), "eq_system": True}, text=f"F = {F}\nG = {G}")


def cmd_even_construct(a, cfg):
    U = read_function(a.U)
    triples = even_construction(U, a.factor_degree)
    rows = [{"A": fn(A), "X": fn(X), "Y": fn(Y), "A o X": fn(compose(A, X, None))} for A, X, Y in triples]
    status = EXIT_OK if triples else EXIT_NO_WITNESS
    return Outcome({"U": fn(U), "triples": rows}, status,
                   "\n".join(f"A={A}, X={X}, Y={Y}" for A, X, Y in triples) or "no triple")


def cmd_common_iterate(a, cfg):
    A, B = read_function(a.A), read_function(a.B)
    r = common_iterate(A, B, cfg.bound, cfg.degree_cap)
    res = {"A": fn(A), "B": fn(B), "bound": cfg.bound}
    if r is None:
        res["witness"] = None
        return Outcome(res, EXIT_NO_WITNESS, "no witness within bound")
    k, l = r
    w = left_witness_from_iterates(A, B, k, l, cfg.degree_cap)
    res.update(k=k, l=l, value=fn(iterate(A, k, cfg.degree_cap)),
               left_reversibility=w.to_json(A, B, cfg.degree_cap))
    return Outcome(res, text=f"k={k}, l={l}")


def cmd_reversibility(a, cfg):
    A, B = read_function(a.A), read_function(a.B)
    res = {"A": fn(A), "B": fn(B)}
    if a.X is not None and a.Y is not None:
        w = ReversibilityWitness(a.side, read_function(a.X), read_function(a.Y))
        ok = verify_reversibility(A, B, w, cfg.degree_cap)
        res["witness"] = w.to_json(A, B, cfg.degree_cap)
        return Outcome(res, EXIT_OK if ok else EXIT_NO_WITNESS, "verified" if ok else "fails")
    r = right_reversibility_equalities(A, B, cfg.bound, cfg.degree_cap)
    res["bound"] = cfg.bound
    if r is None:
        res["right_equalities"] = None
        return Outcome(res, EXIT_NO_WITNESS, "no witness within bound")
    k, l = r
    Ak, Bl = iterate(A, k, cfg.degree_cap), iterate(B, l, cfg.degree_cap)
    res["right_equalities"] = {"k": k, "l": l,
                               "A^(2k)": fn(compose(Ak, Ak, cfg.degree_cap)),
                               "B^(2l)": fn(compose(Bl, Bl, cfg.degree_cap))}
    return Outcome(res, text=f"k={k}, l={l}")


def cmd_free_pair(a, cfg):
    A, B = read_function(a.A), read_function(a.B)
    rel = free_pair_certificate(A, B, cfg.bound, cfg.degree_cap)
    res = {"A": fn(A), "B": fn(B), "word_length": cfg.bound}
    if rel is None:
        res["relation"] = None
        return Outcome(res, EXIT_NO_WITNESS, "no relation within bound")
    res["relation"] = {"left": rel.left, "right": rel.right, "value": fn(rel.value)}
    return Outcome(res, text=f"{rel.left} = {rel.right}")


def _monodromy_kw(cfg):
    return dict(precision=cfg.precision, seed=cfg.seed, fiber_cap=cfg.fiber_cap, threads=cfg.threads)


def cmd_curve_components(a, cfg):
    A, B = read_function(a.A), read_function(a.B)
    rep = analyze_curve(A, B, **_monodromy_kw(cfg))
    res = {"A": fn(A), "B": fn(B)}
    res.update(rep.to_json())
    text = ", ".join(f"deg {c.degree} genus {c.genus}" for c in rep.components)
    return Outcome(res, text=text)


def cmd_tame(a, cfg):
    A = read_function(a.A)
    v = tame_check(A, **_monodromy_kw(cfg))
    res = {"A": fn(A)}
    res.update(v.to_json())
    return Outcome(res, text=f"{v.verdict} {v.genera}")


def cmd_genus_scan(a, cfg):
    A, B = read_function(a.A), read_function(a.B)
    n_max = a.n_max or cfg.bound
    m_max = a.m_max or cfg.bound
    kw = _monodromy_kw(cfg)
    cells = genus_scan(A, B, n_max, m_max, kw.pop("fiber_cap"), **kw)
    res = {"A": fn(A), "B": fn(B), "n_max": n_max, "m_max": m_max, "cells": [c.to_json() for c in cells]}
    text = "\n".join(f"({c.n},{c.m}): " + ("skipped" if c.skipped else f"min genus {c.min_genus}")
                     for c in cells)
    return Outcome(res, text=text)


# -- parser ------------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                        help="search bound (degree, iterate count, word length)")
    common.add_argument("--degree-cap", type=int, default=argparse.SUPPRESS)
    common.add_argument("--precision", type=float, default=argparse.SUPPRESS,
                        help="tracking tolerance for monodromy")
    common.add_argument("--fiber-cap", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "text", "dot"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="ratsemi", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=f"ratsemi {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, *args, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        for arg in args:
            sp.add_argument(arg)
        sp.set_defaults(func=func)
        return sp

    add("compose", cmd_compose, "F", "G", help="F o G")
    add("iterate", cmd_iterate, "F", help="k-th iterate").add_argument("k", type=int)
    add("conjugate", cmd_conjugate, "F", "mu", help="mu o F o mu^-1")
    add("chebyshev", cmd_chebyshev, help="Chebyshev polynomial T_n").add_argument("n", type=int)
    add("special", cmd_special, "P", help="specialness test for a polynomial")
    add("decompose", cmd_decompose, "P", help="all two-factor splittings")
    add("right-factor", cmd_right_factor, "W", "B", help="Y with Y o B = W")
    g = add("gamma-graph", cmd_gamma_graph, "P", help="class graph of elementary transformations")
    g.add_argument("--max-vertices", type=int, default=64)
    g.add_argument("--include-trivial", action="store_true")
    add("aut", cmd_aut, "P", help="affine automorphisms commuting with P")
    add("commutant", cmd_commutant, "P", help="commuting polynomials up to degree --bound")
    add("gp-table", cmd_gp_table, "P", help="Cayley table of the class group").add_argument(
        "--l-max", type=int, default=4)
    add("class-equal", cmd_class_equal, "Q1", "Q2", "P", help="congruence test with l <= --bound")
    add("cinf", cmd_cinf, "X", "P", help="least s with X commuting with P^s")
    s = add("sisis", cmd_sisis, "X", "P", help="iterate system check or search")
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int)
    add("eq-system", cmd_eq_system, "F", "G", help="F o F = F o G and G o G = G o F")
    add("fiber-pair", cmd_fiber_pair, "A", "X", "Y", help="(X o A, Y o A) from A o X = A o Y")
    add("even-construct", cmd_even_construct, "U", help="fiber pairs from U(z^2)").add_argument(
        "--factor-degree", type=int)
    add("common-iterate", cmd_common_iterate, "A", "B", help="least k, l with A^k = B^l")
    r = add("reversibility", cmd_reversibility, "A", "B", help="verify a witness or search")
    r.add_argument("--side", choices=("left", "right"), default="left")
    r.add_argument("--X")
    r.add_argument("--Y")
    add("free-pair", cmd_free_pair, "A", "B", help="relation between words up to --bound")
    add("curve-components", cmd_curve_components, "A", "B", help="components of A(x) = B(y)")
    add("tame", cmd_tame, "A", help="tame/wild verdict")
    gs = add("genus-scan", cmd_genus_scan, "A", "B", help="minimal genus over iterate pairs")
    gs.add_argument("--n-max", type=int)
    gs.add_argument("--m-max", type=int)
    return p


def _config(ns) -> RunConfig:
    fields = RunConfig.__dataclass_fields__
    cfg = RunConfig(**{k: getattr(ns, k) for k in fields if hasattr(ns, k)})
    cfg.validate()
    return cfg


def _command_args(ns) -> dict:
    skip = set(RunConfig.__dataclass_fields__) | {"func", "command"}
    return {k: v.strip() if isinstance(v, str) else v for k, v in sorted(vars(ns).items()) if k not in skip}


def render(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = _parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    # a leading space keeps inputs such as "-z^2" from being read as flags
    argv = [" " + t if t.startswith("-") and not t.startswith("--") and t != "-h" else t for t in argv]
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    report = {"tool": "ratsemi", "version": __version__, "command": ns.command, "arguments": _command_args(ns)}
    try:
        cfg = _config(ns)
        report["config"] = asdict(cfg)
        random.seed(cfg.seed)
        outcome = ns.func(ns, cfg)
    except InvalidInput as exc:
        return _fail(report, out, ns, EXIT_INVALID, "invalid-input", exc)
    except PrecisionError as exc:
        return _fail(report, out, ns, EXIT_PRECISION, "precision-failure", exc)
    except (TruncationError, GroupClosureError) as exc:
        return _fail(report, out, ns, EXIT_PRECISION, "bound-insufficient", exc)
    except (SpecialInputError, DecompositionError, DegreeCapExceeded, ValueError, ZeroDivisionError,
            NotImplementedError, TypeError) as exc:
        return _fail(report, out, ns, EXIT_INVALID, "invalid-input", exc)
    report["status"] = {EXIT_OK: "ok", EXIT_NO_WITNESS: "no-witness"}[outcome.status]
    report["result"] = outcome.result
    fmt = report["config"]["format"]
    if fmt == "dot" and outcome.dot is not None:
        out.write(outcome.dot)
    elif fmt == "text":
        out.write((outcome.text or report["status"]) + "\n")
    else:
        out.write(render(report))
    return outcome.status


def _fail(report, out, ns, code: int, status: str, exc: Exception) -> int:
    report.setdefault("config", None)
    report["status"] = status
    report["error"] = f"{type(exc).__name__}: {exc}"
    if getattr(ns, "format", "json") == "text":
        out.write(f"{status}: {exc}\n")
    else:
        out.write(render(report))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
