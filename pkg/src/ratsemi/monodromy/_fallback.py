"""Pure numpy versions of the fiber-tracking kernels (same signatures)."""
from __future__ import annotations

import numpy as np


def _horner(c: np.ndarray, x: np.ndarray):
    v = np.zeros_like(x)
    d = np.zeros_like(x)
    for a in c:
        d = d * x + v
        v = v * x + a
    return v, d


def _chain(coef, noff, nlen, doff, dlen, xs):
    y = xs
    dy = np.ones_like(xs)
    for f in range(len(noff)):
        nv, nd = _horner(coef[noff[f]: noff[f] + nlen[f]], y)
        if dlen[f] == 1:
            dv = coef[doff[f]]
            dy = dy * (nd / dv)
            y = nv / dv
        else:
            dv, dd = _horner(coef[doff[f]: doff[f] + dlen[f]], y)
            dy = dy * ((nd * dv - nv * dd) / (dv * dv))
            y = nv / dv
    return y, dy


def chain_eval(coef, noff, nlen, doff, dlen, xs):
    return _chain(coef, noff, nlen, doff, dlen, np.asarray(xs, dtype=np.complex128))


def predict(coef, noff, nlen, doff, dlen, xs, dc):
    _, d = _chain(coef, noff, nlen, doff, dlen, xs)
    return xs + dc / d


def newton_batch(coef, noff, nlen, doff, dlen, xs, c, tol, maxit):
    x = xs.copy()
    s = np.full(x.shape, np.inf)
    active = np.ones(x.shape, dtype=bool)
    with np.errstate(divide="ignore", invalid="ignore"):
        for _ in range(maxit):
            if not active.any():
                break
            v, d = _chain(coef, noff, nlen, doff, dlen, x[active])
            step = (v - c) / d
            step[~np.isfinite(step)] = 0
            x[active] = x[active] - step
            s[active] = np.abs(step)
            active[active] = s[active] > tol * (1.0 + np.abs(x[active]))
    xs[:] = x
    worst = float(s.max()) if len(s) else 0.0
    bad = int(np.count_nonzero(~(s <= tol * (1.0 + np.abs(x)))))
    return bad, worst


def nearest_separation(xs):
    if len(xs) < 2:
        return np.full(len(xs), np.inf)
    diff = np.abs(xs[:, None] - xs[None, :])
    np.fill_diagonal(diff, np.inf)
    return diff.min(axis=1)
