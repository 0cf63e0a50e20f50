"""Coverings given as composition chains, branch loci, and fiber tracking.

Exact data (coefficients, critical-point polynomials) feed floating point
root finding and path tracking.  Sheets are continued along lassos around
each branch point; a step is accepted only when Newton converges and no
sheet moves a sizeable fraction of the distance to its nearest neighbour.
"""
from __future__ import annotations

import cmath
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from ..numbers import to_complex
from ..poly import gcd
from ..rational import RationalFunction
from .kernels import get_kernel

DEFAULT_TOLERANCE = 1e-9
HIGH_PRECISION_BITS = 128


class PrecisionError(ArithmeticError):
    """Numeric continuation could not be certified at the working precision."""


Perm = tuple[int, ...]


# -- permutations ------------------------------------------------------------------

def perm_then(p: Perm, q: Perm) -> Perm:
    """Path p followed by path q."""
    return tuple(q[i] for i in p)


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycle_type(p: Perm) -> list[int]:
    seen, out = [False] * len(p), []
    for i in range(len(p)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                n += 1
            out.append(n)
    return sorted(out, reverse=True)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen, out = [False] * len(p), []
    for i in range(len(p)):
        if not seen[i]:
            cyc, j = [], i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = p[j]
            out.append(tuple(cyc))
    return out


def cycle_notation(p: Perm) -> str:
    parts = ["(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


# -- coverings ---------------------------------------------------------------------

class Chain:
    """The covering F = factors[-1] o ... o factors[0] of the sphere."""

    def __init__(self, factors):
        if isinstance(factors, RationalFunction):
            factors = [factors]
        self.factors = list(factors)
        if not self.factors or any(f.degree < 1 for f in self.factors):
            raise ValueError("chain factors must be nonconstant")
        self.degree = math.prod(f.degree for f in self.factors)
        self._packs = {}

    @classmethod
    def iterate(cls, F: RationalFunction, n: int) -> "Chain":
        return cls([F] * n)

    @property
    def is_polynomial(self) -> bool:
        return all(f.is_polynomial() for f in self.factors)

    def pack(self, mode: str = "double"):
        """(coef, noff, nlen, doff, dlen) with numerators padded to a common length."""
        if mode in self._packs:
            return self._packs[mode]
        coef, noff, nlen, doff, dlen = [], [], [], [], []
        for f in self.factors:
            for p, off, ln in ((f.num, noff, nlen), (f.den, doff, dlen)):
                off.append(len(coef))
                ln.append(len(p.coeffs))
                coef.extend(reversed(p.coeffs))
        if mode == "double":
            arr = np.array([complex(to_complex(c)) for c in coef], dtype=np.complex128)
        else:
            arr = [_to_mp(c) for c in coef]
        packed = (arr, np.array(noff, dtype=np.int64), np.array(nlen, dtype=np.int64),
                  np.array(doff, dtype=np.int64), np.array(dlen, dtype=np.int64))
        self._packs[mode] = packed
        return packed

    def evaluate(self, x: complex) -> complex:
        for f in self.factors:
            x = complex(f.evaluate(complex(x)))
        return x

    def fiber(self, c: complex) -> np.ndarray:
        """All deg F preimages of a regular value c, solved factor by factor."""
        targets = [complex(c)]
        for f in reversed(self.factors):
            N, D = f.numeric_pair()
            n = max(len(N), len(D))
            N = N + [0] * (n - len(N))
            D = D + [0] * (n - len(D))
            nxt = []
            for w in targets:
                poly = [N[i] - w * D[i] for i in range(n)][::-1]
                while poly and abs(poly[0]) == 0:
                    poly.pop(0)
                nxt.extend(np.roots(poly))
            targets = nxt
        xs = np.array(targets, dtype=np.complex128)
        if len(xs) != self.degree:
            raise PrecisionError(f"fiber over {c} has {len(xs)} points, expected {self.degree}")
        return xs

    def critical_values(self) -> list[complex]:
        """Finite critical values, plus every finite image of infinity under a
        tail of the chain (points where an intermediate sheet escapes)."""
        out: list[complex] = []
        for i, f in enumerate(self.factors):
            pts = _critical_points(f)
            tail = self.factors[i + 1:]
            for p in pts:
                v = _push(f, p)
                for g in tail:
                    if v is None:
                        break
                    v = _push(g, v)
                if v is not None:
                    out.append(v)
            v = _value_at_infinity(f)
            for g in tail:
                if v is None:
                    break
                v = _push(g, v)
            if v is not None:
                out.append(v)
        return _dedup(out)


def _to_mp(c):
    if isinstance(c, Fraction):
        return mpmath.mpc(mpmath.mpf(c.numerator) / c.denominator)
    z = complex(to_complex(c))
    return mpmath.mpc(z.real, z.imag)


def _critical_points(f: RationalFunction) -> list[complex]:
    """Distinct finite critical points: roots of the square-free part of N'D - ND'."""
    w = f.num.derivative() * f.den - f.num * f.den.derivative()
    if w.degree <= 0:
        return []
    sf = w.exact_div(gcd(w, w.derivative())) if w.degree > 1 else w
    if sf.degree <= 0:
        return []
    coeffs = [complex(to_complex(c)) for c in reversed(sf.coeffs)]
    roots = np.roots(coeffs)
    dcoeffs = np.polyder(np.array(coeffs))
    polished = []
    for r in roots:
        for _ in range(8):
            d = np.polyval(dcoeffs, r)
            if d == 0:
                break
            r = r - np.polyval(coeffs, r) / d
        polished.append(complex(r))
    return polished


def _push(f: RationalFunction, x: complex) -> complex | None:
    N, D = f.numeric_pair()
    dv = np.polyval(D[::-1], x)
    nv = np.polyval(N[::-1], x)
    if abs(dv) <= 1e-14 * max(1.0, abs(nv)):
        return None
    return complex(nv / dv)


def _value_at_infinity(f: RationalFunction) -> complex | None:
    dn, dd = f.num.degree, f.den.degree
    if dn > dd:
        return None
    if dn < dd:
        return 0j
    return complex(to_complex(f.num.lead)) / complex(to_complex(f.den.lead))


def _dedup(values: list[complex], rel: float = 1e-8) -> list[complex]:
    out: list[complex] = []
    for v in sorted(values, key=lambda z: (z.real, z.imag)):
        if not any(abs(v - u) <= rel * (1 + abs(u)) for u in out):
            out.append(v)
    return out


# -- loops -------------------------------------------------------------------------

def _seg_distance(p: complex, a: complex, b: complex) -> float:
    ab = b - a
    if ab == 0:
        return abs(p - a)
    t = max(0.0, min(1.0, ((p - a) * ab.conjugate()).real / abs(ab) ** 2))
    return abs(p - (a + t * ab))


def lasso_radii(points: list[complex], base: complex) -> list[float]:
    """Circle radii keeping each circle clear of other points and other lasso stems."""
    radii = []
    for i, s in enumerate(points):
        r = abs(s - base)
        for j, t in enumerate(points):
            if i != j:
                r = min(r, abs(s - t), _seg_distance(s, base, t))
        radii.append(0.3 * r)
    return radii


def choose_base_point(points: list[complex], seed: int = 0, attempt: int = 0) -> complex:
    """A generic base point: best clearance among seeded random candidates."""
    if not points:
        return complex(0.5, 0.25)
    rng = random.Random(1_000_003 * seed + attempt)
    center = sum(points) / len(points)
    spread = max(max(abs(p - center) for p in points), 1.0)
    best, best_score = None, -1.0
    for _ in range(24):
        b = center + spread * complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
        radii = lasso_radii(points, b)
        score = min(radii) / spread
        if score > best_score:
            best, best_score = b, score
    return best


@dataclass
class LoopGeometry:
    base: complex
    points: list[complex]           # finite marked points in loop order
    radii: list[float]
    ray_angle: float
    outer_radius: float

    @classmethod
    def build(cls, points: list[complex], base: complex) -> "LoopGeometry":
        if not points:
            return cls(base, [], [], 0.0, 2.0)
        args = [cmath.phase(p - base) for p in points]
        order = sorted(range(len(points)), key=lambda i: args[i])
        sorted_args = [args[i] for i in order]
        gaps = [(sorted_args[(k + 1) % len(order)] - sorted_args[k]) % (2 * math.pi) or 2 * math.pi
                for k in range(len(order))]
        k = max(range(len(gaps)), key=lambda i: gaps[i])
        ray = sorted_args[k] + gaps[k] / 2
        # counterclockwise order starting just after the ray
        pts = sorted(points, key=lambda p: (cmath.phase(p - base) - ray) % (2 * math.pi))
        outer = 1.5 * max(abs(p - base) for p in pts) + 1.0
        return cls(base, pts, lasso_radii(pts, base), ray, outer)


def _segment(a: complex, b: complex):
    return lambda t: a + (b - a) * t


def _arc(center: complex, radius: float, start: float):
    return lambda t: center + radius * cmath.exp(1j * (start + 2 * math.pi * t))


def lasso_pieces(geom: LoopGeometry, i: int):
    s, r, b = geom.points[i], geom.radii[i], geom.base
    u = (b - s) / abs(b - s)
    p = s + r * u
    return [_segment(b, p), _arc(s, r, cmath.phase(u)), _segment(p, b)]


def outer_pieces(geom: LoopGeometry):
    b = geom.base
    p = b + geom.outer_radius * cmath.exp(1j * geom.ray_angle)
    return [_segment(b, p), _arc(b, geom.outer_radius, geom.ray_angle), _segment(p, b)]


# -- tracking ----------------------------------------------------------------------

@dataclass
class Tracker:
    chain: Chain
    tol: float = DEFAULT_TOLERANCE
    mode: str = "double"          # "double" or "mp"
    kernel_name: str | None = None
    max_steps: int = 200_000
    min_step: float = 1e-12
    steps_taken: int = field(default=0, init=False)

    def __post_init__(self):
        self.kernel = get_kernel("mp" if self.mode == "mp" else self.kernel_name)
        self.packed = self.chain.pack("mp" if self.mode == "mp" else "double")

    def _c(self, z: complex):
        return mpmath.mpc(z.real, z.imag) if self.mode == "mp" else complex(z)

    def start_fiber(self, base: complex):
        xs = self.chain.fiber(base)
        xs = np.array(sorted(xs, key=lambda z: (round(z.real, 6), round(z.imag, 6))), dtype=np.complex128)
        if self.mode == "mp":
            xs = np.array([mpmath.mpc(z.real, z.imag) for z in xs], dtype=object)
        bad, _ = self.kernel.newton_batch(*self.packed, xs, self._c(base), self.tol, 50)
        if bad:
            raise PrecisionError("base fiber did not converge")
        sep = self.kernel.nearest_separation(xs)
        if not min(sep) > 1e3 * self.tol * (1 + max(abs(x) for x in xs)):
            raise PrecisionError("base fiber is not separated (base point too close to a branch point)")
        return xs

    def follow(self, path, xs):
        """Continue the sheets along path(t), t in [0, 1]."""
        k = self.kernel
        t, h = 0.0, 1.0 / 16
        c0 = path(0.0)
        sep = k.nearest_separation(xs)
        while t < 1.0:
            h = min(h, 1.0 - t)
            t1 = 1.0 if h >= 1.0 - t else t + h
            c1 = path(t1)
            pred = k.predict(*self.packed, xs, self._c(c1 - c0))
            new = pred.copy()
            bad, _ = k.newton_batch(*self.packed, new, self._c(c1), self.tol, 8)
            ok = bad == 0
            if ok:
                moved = np.abs(new - xs)
                drift = np.abs(new - pred)
                ok = bool(np.all(moved < 0.3 * sep) and np.all(drift < 0.05 * sep))
            if ok:
                new_sep = k.nearest_separation(new)
                ok = bool(np.all(new_sep > 0.2 * sep))
            self.steps_taken += 1
            if self.steps_taken > self.max_steps:
                raise PrecisionError("step budget exhausted")
            if ok:
                xs, sep, t, c0 = new, new_sep, t1, c1
                h *= 1.5
            else:
                h /= 2
                if h < self.min_step:
                    raise PrecisionError(f"step size underflow at t={t:.6g} near c={complex(c0):.6g}")
        return xs

    def loop_permutation(self, pieces, start) -> Perm:
        xs = start
        for piece in pieces:
            xs = self.follow(piece, xs)
        return match_fibers(start, xs, self.kernel)


def match_fibers(start, end, kernel) -> Perm:
    """Sheet i (continued to end[i]) lands on the start sheet nearest end[i]."""
    sep = kernel.nearest_separation(start)
    perm = []
    for e in end:
        d = np.abs(start - e)
        j = int(np.argmin(d))
        if not d[j] < 0.25 * sep[j]:
            raise PrecisionError("tracked fiber does not return to the base fiber")
        perm.append(j)
    if len(set(perm)) != len(perm):
        raise PrecisionError("fiber matching is not a bijection")
    return tuple(perm)


def track_loops(tracker: Tracker, geom: LoopGeometry, indices: list[int], start, threads: int = 1):
    jobs = [lasso_pieces(geom, i) for i in indices]
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda pcs: tracker.loop_permutation(pcs, start), jobs))
    return [tracker.loop_permutation(pcs, start) for pcs in jobs]
