# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fiber-tracking kernels on a packed composition chain.

A chain F = F_k o ... o F_1 is packed as one complex coefficient array with
per-factor offsets and lengths for numerator and denominator (highest
degree first).  All routines work in place on complex128 arrays.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs

cnp.import_array()

ctypedef double complex cplx


cdef inline double cabs2(cplx z) nogil:
    return z.real * z.real + z.imag * z.imag


cdef inline void horner(const cplx* c, Py_ssize_t n, cplx x, cplx* val, cplx* der) nogil:
    cdef cplx v = 0, d = 0
    cdef Py_ssize_t i
    for i in range(n):
        d = d * x + v
        v = v * x + c[i]
    val[0] = v
    der[0] = d


cdef inline void chain_point(const cplx* coef, const long* noff, const long* nlen,
                             const long* doff, const long* dlen, Py_ssize_t k,
                             cplx x, cplx* val, cplx* der) nogil:
    cdef cplx y = x, dy = 1, nv, nd, dv, dd
    cdef Py_ssize_t f
    for f in range(k):
        horner(coef + noff[f], nlen[f], y, &nv, &nd)
        if dlen[f] == 1:
            dv = coef[doff[f]]
            dy = dy * (nd / dv)
            y = nv / dv
        else:
            horner(coef + doff[f], dlen[f], y, &dv, &dd)
            dy = dy * ((nd * dv - nv * dd) / (dv * dv))
            y = nv / dv
    val[0] = y
    der[0] = dy


def chain_eval(cplx[::1] coef, long[::1] noff, long[::1] nlen, long[::1] doff,
               long[::1] dlen, cplx[::1] xs):
    cdef Py_ssize_t n = xs.shape[0], i, k = noff.shape[0]
    vals = np.empty(n, dtype=np.complex128)
    ders = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] vv = vals, dv = ders
    with nogil:
        for i in range(n):
            chain_point(&coef[0], &noff[0], &nlen[0], &doff[0], &dlen[0], k, xs[i], &vv[i], &dv[i])
    return vals, ders


def predict(cplx[::1] coef, long[::1] noff, long[::1] nlen, long[::1] doff,
            long[::1] dlen, cplx[::1] xs, cplx dc):
    """Tangent step x + dc / F'(x)."""
    cdef Py_ssize_t n = xs.shape[0], i, k = noff.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] o = out
    cdef cplx v, d
    with nogil:
        for i in range(n):
            chain_point(&coef[0], &noff[0], &nlen[0], &doff[0], &dlen[0], k, xs[i], &v, &d)
            o[i] = xs[i] + dc / d
    return out


def newton_batch(cplx[::1] coef, long[::1] noff, long[::1] nlen, long[::1] doff,
                 long[::1] dlen, cplx[::1] xs, cplx c, double tol, int maxit):
    """Newton on F(x) = c for every sheet; returns (unconverged count, max last step)."""
    cdef Py_ssize_t n = xs.shape[0], i, k = noff.shape[0]
    cdef int it, bad = 0
    cdef cplx v, d, step, x
    cdef double worst = 0.0, s, scale
    with nogil:
        for i in range(n):
            x = xs[i]
            s = 1e300
            for it in range(maxit):
                chain_point(&coef[0], &noff[0], &nlen[0], &doff[0], &dlen[0], k, x, &v, &d)
                if d == 0:
                    break
                step = (v - c) / d
                x = x - step
                s = sqrt(cabs2(step))
                scale = 1.0 + sqrt(cabs2(x))
                if s <= tol * scale:
                    break
            xs[i] = x
            scale = 1.0 + sqrt(cabs2(x))
            if not (s <= tol * scale):
                bad += 1
            if s > worst:
                worst = s
    return bad, worst


def nearest_separation(cplx[::1] xs):
    """Distance from each point to its nearest neighbour."""
    cdef Py_ssize_t n = xs.shape[0], i, j
    out = np.full(n, np.inf)
    cdef double[::1] o = out
    cdef double dist2
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                dist2 = cabs2(xs[i] - xs[j])
                if dist2 < o[i]:
                    o[i] = dist2
                if dist2 < o[j]:
                    o[j] = dist2
        for i in range(n):
            o[i] = sqrt(o[i])
    return out
