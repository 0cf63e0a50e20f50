"""Multiprecision kernels (mpmath) used after a double-precision failure.

Arrays are numpy object arrays of ``mpc``; callers hold ``mpmath.workprec``.
"""
from __future__ import annotations

import mpmath
import numpy as np


def _point(coef, noff, nlen, doff, dlen, x):
    y, dy = x, mpmath.mpc(1)
    for f in range(len(noff)):
        nv = nd = mpmath.mpc(0)
        for a in coef[noff[f]: noff[f] + nlen[f]]:
            nd = nd * y + nv
            nv = nv * y + a
        if dlen[f] == 1:
            dv = coef[doff[f]]
            dy *= nd / dv
            y = nv / dv
        else:
            dv = dd = mpmath.mpc(0)
            for a in coef[doff[f]: doff[f] + dlen[f]]:
                dd = dd * y + dv
                dv = dv * y + a
            dy *= (nd * dv - nv * dd) / (dv * dv)
            y = nv / dv
    return y, dy


def chain_eval(coef, noff, nlen, doff, dlen, xs):
    pairs = [_point(coef, noff, nlen, doff, dlen, x) for x in xs]
    return (np.array([p[0] for p in pairs], dtype=object),
            np.array([p[1] for p in pairs], dtype=object))


def predict(coef, noff, nlen, doff, dlen, xs, dc):
    out = np.empty(len(xs), dtype=object)
    for i, x in enumerate(xs):
        _, d = _point(coef, noff, nlen, doff, dlen, x)
        out[i] = x + dc / d
    return out


def newton_batch(coef, noff, nlen, doff, dlen, xs, c, tol, maxit):
    bad, worst = 0, mpmath.mpf(0)
    for i, x in enumerate(xs):
        s = mpmath.inf
        for _ in range(maxit):
            v, d = _point(coef, noff, nlen, doff, dlen, x)
            if d == 0:
                break
            step = (v - c) / d
            x = x - step
            s = abs(step)
            if s <= tol * (1 + abs(x)):
                break
        xs[i] = x
        if not s <= tol * (1 + abs(x)):
            bad += 1
        worst = max(worst, s)
    return bad, worst


def nearest_separation(xs):
    n = len(xs)
    out = np.array([mpmath.inf] * n, dtype=object)
    for i in range(n):
        for j in range(i + 1, n):
            d = abs(xs[i] - xs[j])
            if d < out[i]:
                out[i] = d
            if d < out[j]:
                out[j] = d
    return out
