# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled float64 kernels: cosine sums, sine integral, window sums.

Mirrors ``coslab._kernels_py``; see that module for the contracts.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sin, cos, fabs, floor, M_PI

cnp.import_array()

cdef double GL_X[10]
cdef double GL_W[10]
cdef double SI_TABLE[41]   # Si(k) for k = 0..40; entries below 4 unused

_x, _w = np.polynomial.legendre.leggauss(10)
for _i in range(10):
    GL_X[_i] = _x[_i]
    GL_W[_i] = _w[_i]


cdef inline double _si_series(double x) nogil:
    # alternating series, |x| <= 4
    cdef double x2 = x * x
    cdef double term = x          # x^(2k+1) / (2k+1)!
    cdef double total = x
    cdef int k = 0
    cdef double t
    while True:
        k += 1
        term = -term * x2 / ((2 * k) * (2 * k + 1))
        t = term / (2 * k + 1)
        total += t
        if fabs(t) < 1e-18 * fabs(total) + 1e-300:
            break
    return total


cdef inline double _sinc_gl(double a, double b) nogil:
    # 10-point Gauss-Legendre for sin(t)/t on [a, b], b - a <= 1, a >= 1
    cdef double h = 0.5 * (b - a)
    cdef double c = 0.5 * (b + a)
    cdef double s = 0.0
    cdef double t
    cdef int i
    for i in range(10):
        t = c + h * GL_X[i]
        s += GL_W[i] * sin(t) / t
    return h * s


cdef inline double _si_asym(double x) nogil:
    # Si(x) = pi/2 - f(x) cos x - g(x) sin x, asymptotic f, g for x > 40
    cdef double ix2 = 1.0 / (x * x)
    cdef double f = 1.0, g = 1.0
    cdef double tf = 1.0, tg = 1.0
    cdef int k
    for k in range(1, 30):
        tf = -tf * (2 * k - 1) * (2 * k) * ix2
        tg = -tg * (2 * k) * (2 * k + 1) * ix2
        f += tf
        g += tg
        if fabs(tf) < 1e-18 and fabs(tg) < 1e-18:
            break
    f = f / x
    g = g * ix2
    return 0.5 * M_PI - f * cos(x) - g * sin(x)


cdef inline double _si(double x) nogil:
    cdef double ax = fabs(x)
    cdef double r, k
    if ax <= 4.0:
        r = _si_series(ax)
    elif ax <= 40.0:
        k = floor(ax)
        r = SI_TABLE[<int>k] + _sinc_gl(k, ax)
    else:
        r = _si_asym(ax)
    return -r if x < 0 else r


def _init_table():
    cdef int k
    SI_TABLE[4] = _si_series(4.0)
    for k in range(4, 40):
        SI_TABLE[k + 1] = SI_TABLE[k] + _sinc_gl(<double>k, <double>(k + 1))

_init_table()


def si(xs):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0], i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n)
    with nogil:
        for i in range(n):
            out[i] = _si(x[i])
    return out


cdef void _clenshaw(const double[::1] a, const double[::1] x, double[::1] b1, double[::1] b2,
                    bint antiderivative) noexcept nogil:
    # points in the inner loop so the recurrence vectorizes across them
    cdef Py_ssize_t n = x.shape[0], m = a.shape[0], i, k
    cdef double ak, b0
    for i in range(n):
        b1[i] = 0.0
        b2[i] = 0.0
    for k in range(m - 1, 0, -1):
        ak = a[k] / k if antiderivative else a[k]
        for i in range(n):
            b0 = ak + 2.0 * x[i] * b1[i] - b2[i]
            b2[i] = b1[i]
            b1[i] = b0


def cos_sum(coeffs, ts):
    cdef double[::1] a = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef double[::1] x = np.cos(np.ascontiguousarray(ts, dtype=np.float64))
    cdef Py_ssize_t n = x.shape[0], i
    out = np.empty(n)
    b2_arr = np.empty(n)
    cdef double[::1] b1 = out, b2 = b2_arr
    if a.shape[0] == 0:
        return np.zeros(n)
    with nogil:
        _clenshaw(a, x, b1, b2, False)
        for i in range(n):
            b1[i] = a[0] + x[i] * b1[i] - b2[i]
    return out


def cos_antiderivative(coeffs, ts):
    cdef double[::1] a = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef double[::1] t = np.ascontiguousarray(ts, dtype=np.float64)
    cdef double[::1] x = np.cos(t)
    cdef Py_ssize_t n = t.shape[0], i
    out = np.empty(n)
    b2_arr = np.empty(n)
    cdef double[::1] b1 = out, b2 = b2_arr
    if a.shape[0] == 0:
        return np.zeros(n)
    with nogil:
        _clenshaw(a, x, b1, b2, True)
        for i in range(n):
            b1[i] = a[0] * t[i] + sin(t[i]) * b1[i]
    return out


def window_sums(ns, xs):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] nn = np.ascontiguousarray(ns, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t nx = x.shape[0], k = nn.shape[0], i, j
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(nx)
    cdef double prev, cur, s
    with nogil:
        for i in range(nx):
            prev = 0.0
            s = 0.0
            for j in range(k):
                cur = _si(nn[j] * x[i])
                s += fabs(cur - prev)
                prev = cur
            out[i] = s
    return out


def dirichlet_integral(n, xs):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t nx = x.shape[0], i
    cdef long m, nmax = n
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(nx)
    cdef double s, c, w, y, tot
    with nogil:
        for i in range(nx):
            w = 2.0 * M_PI * x[i]
            s = 0.0
            c = 0.0
            # Kahan summation; the terms cancel heavily
            for m in range(nmax, 0, -1):
                y = sin(m * w) / (2.0 * M_PI * m) - c
                tot = s + y
                c = (tot - s) - y
                s = tot
            out[i] = 0.5 * x[i] + s
    return out
