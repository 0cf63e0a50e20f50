"""Components and genera of separated-variable curves A(x) = B(y).

Components of the fiber product correspond to orbits of the diagonal
monodromy action on sheet pairs; each component's genus follows from
Riemann-Hurwitz applied to the induced covering of the sphere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from ..poly import Polynomial
from ..rational import RationalFunction
from .tracking import (
    DEFAULT_TOLERANCE,
    HIGH_PRECISION_BITS,
    Chain,
    LoopGeometry,
    Perm,
    PrecisionError,
    Tracker,
    choose_base_point,
    cycle_notation,
    cycle_type,
    lasso_pieces,
    outer_pieces,
    track_loops,
    perm_inverse,
    perm_then,
)

DEFAULT_FIBER_CAP = 81


# -- exact branch locus ------------------------------------------------------------

@dataclass(frozen=True)
class CriticalValues:
    polynomial: Polynomial | None  # square-free, monic; roots are the finite critical values
    values: list[complex]
    infinity: bool                 # infinity is a branch point (always for polynomials)


def critical_values(A: RationalFunction) -> CriticalValues:
    """Discriminant in x of num_A(x) - c den_A(x), as an exact polynomial in c."""
    if A.degree < 2:
        raise ValueError("critical values need degree >= 2")
    exact = None
    try:
        exact = _discriminant_polynomial(A)
    except TypeError:  # coefficients outside Q
        pass
    values = Chain(A).critical_values()
    if not A.is_polynomial():
        # keep only genuine critical values, not mere images of infinity
        values = [v for v in values if _is_branch_value(A, v)]
    return CriticalValues(exact, values, A.is_polynomial() or _ramified_at_infinity(A))


def _discriminant_polynomial(A: RationalFunction) -> Polynomial:
    import sympy

    x, c = sympy.symbols("x c")
    for coeff in A.num.coeffs + A.den.coeffs:
        if not isinstance(coeff, Fraction):
            raise TypeError("discriminant needs rational coefficients")

    def expr(p: Polynomial):
        return sum(sympy.Rational(a.numerator, a.denominator) * x ** i for i, a in enumerate(p.coeffs))

    disc = sympy.Poly(sympy.discriminant(sympy.expand(expr(A.num) - c * expr(A.den)), x), c)
    sqf = sympy.Poly(sympy.quo(disc, sympy.gcd(disc, disc.diff(c))), c).monic()
    coeffs = [Fraction(int(sympy.numer(a)), int(sympy.denom(a))) for a in reversed(sqf.all_coeffs())]
    return Polynomial(coeffs)


def _is_branch_value(A: RationalFunction, v: complex) -> bool:
    fiber = Chain(A).fiber(v)
    return len(fiber) < A.degree or _min_gap(fiber) < 1e-6 * (1 + abs(v)) or _fiber_hits_infinity(A, v)


def _fiber_hits_infinity(A, v):
    N, D = A.num, A.den
    return N.degree <= D.degree and abs(complex(A.evaluate(complex(1e12))) - v) < 1e-6


def _ramified_at_infinity(A: RationalFunction) -> bool:
    d = A.num.degree - A.den.degree
    if abs(d) >= 2:
        return True
    if d == 1 or d == -1:
        return False
    return A.num.degree > 0 and _orders_at_infinity(A) >= 2


def _orders_at_infinity(A):
    # order of vanishing of A - A(inf) at infinity for deg num == deg den
    lead = A.num.lead / A.den.lead
    diff = A.num - A.den * lead
    return A.den.degree - diff.degree if not diff.is_zero() else math.inf


def _min_gap(xs) -> float:
    xs = list(xs)
    return min((abs(a - b) for i, a in enumerate(xs) for b in xs[i + 1:]), default=math.inf)


# -- monodromy systems -------------------------------------------------------------

@dataclass
class Covering:
    chain: Chain
    owned: list[int]              # indices of loop points that are branch points of this covering
    perms: list[Perm]             # one per loop point (identity where not owned)
    perm_infinity: Perm
    outer_loop: Perm

    @property
    def degree(self) -> int:
        return self.chain.degree


@dataclass
class MonodromySystem:
    branch_points: list[complex]  # finite loop points in loop order; infinity is implicit
    coverings: list[Covering]
    base_point: complex
    precision: float
    mode: str
    attempts: int = 1
    checks: dict = field(default_factory=dict)

    @property
    def perms_A(self) -> list[Perm]:
        return self.coverings[0].perms

    @property
    def perms_B(self) -> list[Perm]:
        return self.coverings[-1].perms

    def product_relation_holds(self) -> bool:
        for cov in self.coverings:
            acc = tuple(range(cov.degree))
            for p in cov.perms + [cov.perm_infinity]:
                acc = perm_then(acc, p)
            if acc != tuple(range(cov.degree)):
                return False
        return True

    def to_json(self) -> dict:
        digits = 12 if self.mode == "double" else 30
        return {
            "base_point": _cstr(self.base_point, digits),
            "branch_points": [_cstr(p, digits) for p in self.branch_points] + ["infinity"],
            "precision": {"tolerance": self.precision, "mode": self.mode},
            "coverings": [
                {
                    "degree": c.degree,
                    "permutations": [[j + 1 for j in p] for p in c.perms + [c.perm_infinity]],
                    "cycles": [cycle_notation(p) for p in c.perms + [c.perm_infinity]],
                }
                for c in self.coverings
            ],
            "checks": self.checks,
            "certification": "numerically certified",
        }


def _cstr(z: complex, digits: int) -> str:
    z = complex(z)
    re = round(z.real, digits) + 0.0
    im = round(z.imag, digits) + 0.0
    return f"{re:.{digits}g}{im:+.{digits}g}j"


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _track_covering(chain: Chain, geom: LoopGeometry, owned_mask: list[bool], tol: float,
                    mode: str, kernel: str | None, threads: int) -> Covering:
    tracker = Tracker(chain, tol=tol, mode=mode, kernel_name=kernel)
    start = tracker.start_fiber(geom.base)
    n = chain.degree
    owned = [i for i, m in enumerate(owned_mask) if m]
    tracked = dict(zip(owned, track_loops(tracker, geom, owned, start, threads)))
    perms = [tracked.get(i, _identity(n)) for i in range(len(geom.points))]
    outer = tracker.loop_permutation(outer_pieces(geom), start)
    return Covering(chain, owned, perms, perm_inverse(outer), outer)


def _certify(cov: Covering) -> dict:
    n = cov.degree
    acc = _identity(n)
    for p in cov.perms:
        acc = perm_then(acc, p)
    checks = {"outer_loop_matches_product": acc == cov.outer_loop}
    all_perms = cov.perms + [cov.perm_infinity]
    ram = sum(n - len(cycle_type(p)) for p in all_perms)
    checks["riemann_hurwitz_sphere"] = ram == 2 * n - 2
    checks["transitive"] = len(_orbits(n, all_perms)) == 1
    if cov.chain.is_polynomial:
        checks["full_cycle_at_infinity"] = cycle_type(cov.perm_infinity) == [n]
    return checks


def monodromy_system(coverings: list, precision: float = DEFAULT_TOLERANCE, seed: int = 0,
                     kernel: str | None = None, threads: int = 1, retries: int = 3,
                     mode: str = "auto") -> MonodromySystem:
    """Track every covering over a common loop system and certify the result.

    Failures retry with fresh base points, then once more at 128-bit
    precision; persistent failure raises PrecisionError.  ``mode`` is
    "auto", "double" or "mp" (start and stay at high precision).
    """
    modes = {"auto": ("double", "mp"), "double": ("double",), "mp": ("mp",)}[mode]
    chains = [c if isinstance(c, Chain) else Chain(c) for c in coverings]
    own_values = [ch.critical_values() for ch in chains]
    points, owners = _merge([v for vals in own_values for v in vals],
                            [k for k, vals in enumerate(own_values) for _ in vals])
    last_error = None
    attempt = 0
    for mode in modes:
        tol = precision if mode == "double" else precision ** 2
        for r in range(retries):
            attempt += 1
            base = choose_base_point(points, seed, r)
            geom = LoopGeometry.build(points, base)
            order = [points.index(p) for p in geom.points]
            try:
                with mpmath.workprec(HIGH_PRECISION_BITS):
                    covs = []
                    for k, ch in enumerate(chains):
                        mask = [k in owners[i] for i in order]
                        covs.append(_track_covering(ch, geom, mask, tol, mode, kernel, threads))
                checks = {}
                for k, cov in enumerate(covs):
                    for name, ok in _certify(cov).items():
                        checks[f"covering{k}:{name}"] = ok
                if all(checks.values()):
                    system = MonodromySystem(geom.points, covs, base, tol, mode, attempt, checks)
                    assert system.product_relation_holds()
                    return system
                last_error = PrecisionError("certification failed: " + ", ".join(
                    k for k, v in checks.items() if not v))
            except PrecisionError as exc:
                last_error = exc
    raise PrecisionError(f"monodromy not certified after {attempt} attempts: {last_error}")


def _merge(values: list[complex], owner: list[int], rel: float = 1e-8):
    points: list[complex] = []
    owners: list[set] = []
    for v, k in sorted(zip(values, owner), key=lambda t: (t[0].real, t[0].imag, t[1])):
        for i, u in enumerate(points):
            if abs(v - u) <= rel * (1 + abs(u)):
                owners[i].add(k)
                break
        else:
            points.append(v)
            owners.append({k})
    return points, owners


def monodromy(A: RationalFunction, S: list[complex], base: complex,
              precision: float = DEFAULT_TOLERANCE, kernel: str | None = None) -> list[Perm]:
    """Permutations of the fiber of A along a lasso around each s in S (in S order)."""
    geom = LoopGeometry.build(list(S), base)
    tracker = Tracker(Chain(A), tol=precision, kernel_name=kernel)
    start = tracker.start_fiber(base)
    perms = {}
    for i, p in enumerate(geom.points):
        perms[p] = tracker.loop_permutation(lasso_pieces(geom, i), start)
    return [perms[s] for s in S]


# -- components --------------------------------------------------------------------

def _orbits(n: int, perms: list[Perm]) -> list[list[int]]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in perms:
        for i, j in enumerate(p):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


@dataclass(frozen=True)
class CurveComponent:
    orbit: tuple[tuple[int, int], ...]   # sheet pairs (i, j), 0-based
    degree: int
    genus: int
    degree_x: int                        # projection degree to the x sheet set
    degree_y: int

    @property
    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.orbit)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "genus": self.genus,
            "degree_x": self.degree_x,
            "degree_y": self.degree_y,
            "orbit": [[i + 1, j + 1] for i, j in self.orbit],
        }


def _pair_perms(pa: list[Perm], pb: list[Perm], nb: int) -> list[Perm]:
    out = []
    na = len(pa[0]) if pa else 0
    for p, q in zip(pa, pb):
        out.append(tuple(p[i] * nb + q[j] for i in range(na) for j in range(nb)))
    return out


def components_from_system(system: MonodromySystem) -> list[CurveComponent]:
    ca, cb = system.coverings[0], system.coverings[-1]
    na, nb = ca.degree, cb.degree
    pair = _pair_perms(ca.perms + [ca.perm_infinity], cb.perms + [cb.perm_infinity], nb)
    out = []
    for orbit in _orbits(na * nb, pair):
        members = set(orbit)
        size = len(orbit)
        ram = 0
        for p in pair:
            cyc, seen = 0, set()
            for e in orbit:
                if e not in seen:
                    cyc += 1
                    while e not in seen:
                        seen.add(e)
                        e = p[e]
            ram += size - cyc
        twice = ram - 2 * size + 2
        if twice % 2 or twice < 0:
            raise PrecisionError(f"Riemann-Hurwitz gives non-integral genus for an orbit of size {size}")
        pairs = tuple(sorted(divmod(e, nb) for e in members))
        out.append(CurveComponent(pairs, size, twice // 2,
                                  len({i for i, _ in pairs}) and size // len({i for i, _ in pairs}),
                                  len({j for _, j in pairs}) and size // len({j for _, j in pairs})))
    out.sort(key=lambda c: (c.degree, c.genus, c.orbit))
    return out


@dataclass
class CurveReport:
    components: list[CurveComponent]
    system: MonodromySystem

    def to_json(self) -> dict:
        return {
            "components": [c.to_json() for c in self.components],
            "total_degree": sum(c.degree for c in self.components),
            "monodromy": self.system.to_json(),
        }


def _as_chain(F) -> Chain:
    return F if isinstance(F, Chain) else Chain(F)


def analyze_curve(A, B, precision: float = DEFAULT_TOLERANCE, seed: int = 0,
                  fiber_cap: int = DEFAULT_FIBER_CAP, kernel: str | None = None,
                  threads: int = 1) -> CurveReport:
    ca, cb = _as_chain(A), _as_chain(B)
    for ch in (ca, cb):
        if ch.degree > fiber_cap:
            raise ValueError(f"fiber of size {ch.degree} exceeds fiber_cap={fiber_cap}")
    covs = [ca] if _same_chain(ca, cb) else [ca, cb]
    system = monodromy_system(covs, precision, seed, kernel, threads)
    comps = components_from_system(system)
    if sum(c.degree for c in comps) != ca.degree * cb.degree:
        raise PrecisionError("component degrees do not sum to deg A * deg B")
    return CurveReport(comps, system)


def _same_chain(a: Chain, b: Chain) -> bool:
    return a.factors == b.factors


def fiber_components(A, B, precision: float = DEFAULT_TOLERANCE, seed: int = 0,
                     fiber_cap: int = DEFAULT_FIBER_CAP, kernel: str | None = None,
                     threads: int = 1) -> list[CurveComponent]:
    return analyze_curve(A, B, precision, seed, fiber_cap, kernel, threads).components


@dataclass
class TameVerdict:
    verdict: str                 # "tame" or "wild"
    components: list[CurveComponent]
    diagonal: CurveComponent
    anomalies: list[str]
    system: MonodromySystem

    @property
    def genera(self) -> list[int]:
        return [c.genus for c in self.components]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "genera": self.genera,
            "components": [c.to_json() for c in self.components],
            "diagonal": self.diagonal.to_json(),
            "anomalies": self.anomalies,
            "monodromy": self.system.to_json(),
        }


def tame_check(A, precision: float = DEFAULT_TOLERANCE, seed: int = 0,
               fiber_cap: int = DEFAULT_FIBER_CAP, kernel: str | None = None,
               threads: int = 1) -> TameVerdict:
    """Wild iff (A(x) - A(y))/(x - y) has a component of genus <= 1."""
    chain = _as_chain(A)
    if chain.degree < 2:
        raise ValueError("tame check needs degree >= 2")
    report = analyze_curve(chain, chain, precision, seed, fiber_cap, kernel, threads)
    diagonal = [c for c in report.components if c.is_diagonal]
    anomalies = []
    if len(diagonal) != 1 or diagonal[0].degree != chain.degree:
        anomalies.append("diagonal orbit is not a single orbit of size deg A")
    diag = diagonal[0]
    rest = [c for c in report.components if c is not diag]
    verdict = "wild" if any(c.genus <= 1 for c in rest) else "tame"
    return TameVerdict(verdict, rest, diag, anomalies, report.system)


@dataclass(frozen=True)
class ScanCell:
    n: int
    m: int
    skipped: bool
    min_genus: int | None = None
    genera: tuple[int, ...] = ()
    degrees: tuple[int, ...] = ()

    def to_json(self) -> dict:
        out = {"n": self.n, "m": self.m, "skipped": self.skipped}
        if not self.skipped:
            out.update(min_genus=self.min_genus, genera=list(self.genera), degrees=list(self.degrees))
        return out


def genus_scan(A: RationalFunction, B: RationalFunction, n_max: int, m_max: int,
               fiber_cap: int = DEFAULT_FIBER_CAP, precision: float = DEFAULT_TOLERANCE,
               seed: int = 0, kernel: str | None = None, threads: int = 1) -> list[ScanCell]:
    """Minimal component genus of A^n(x) = B^m(y) for 1 <= n <= n_max, 1 <= m <= m_max.

    Cells with an iterate fiber larger than ``fiber_cap`` on either side are skipped.
    """
    cells = []
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            if A.degree ** n > fiber_cap or B.degree ** m > fiber_cap:
                cells.append(ScanCell(n, m, True))
                continue
            comps = fiber_components(Chain.iterate(A, n), Chain.iterate(B, m), precision, seed,
                                     fiber_cap, kernel, threads)
            genera = tuple(c.genus for c in comps)
            cells.append(ScanCell(n, m, False, min(genera), genera, tuple(c.degree for c in comps)))
    return cells
