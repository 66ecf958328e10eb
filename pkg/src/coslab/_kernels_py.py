"""Pure numpy/scipy implementations of the float64 hot kernels.

Same signatures as the compiled ``_kernels`` extension; selected by
:mod:`coslab.kernels` when the extension is missing or when
``COSLAB_KERNELS=python`` is set.
"""

import numpy as np
from scipy.special import sici

_CHUNK = 1 << 20


def cos_sum(coeffs, ts):
    """``sum_n a_n cos(n t)`` at every ``t`` (Clenshaw in ``cos t``)."""
    a = np.ascontiguousarray(coeffs, dtype=np.float64)
    t = np.ascontiguousarray(ts, dtype=np.float64)
    x = np.cos(t)
    b1 = np.zeros_like(x)
    b2 = np.zeros_like(x)
    for k in range(len(a) - 1, 0, -1):
        b1, b2 = a[k] + 2.0 * x * b1 - b2, b1
    return a[0] + x * b1 - b2


def cos_antiderivative(coeffs, ts):
    """``a_0 t + sum_{n>=1} a_n sin(n t) / n`` at every ``t``."""
    a = np.ascontiguousarray(coeffs, dtype=np.float64)
    t = np.ascontiguousarray(ts, dtype=np.float64)
    if len(a) == 0:
        return np.zeros_like(t)
    x = np.cos(t)
    b1 = np.zeros_like(x)
    b2 = np.zeros_like(x)
    for k in range(len(a) - 1, 0, -1):
        b1, b2 = a[k] / k + 2.0 * x * b1 - b2, b1
    return a[0] * t + np.sin(t) * b1


def si(xs):
    x = np.ascontiguousarray(xs, dtype=np.float64)
    return sici(x)[0]


def window_sums(ns, xs):
    """For each ``x``: ``sum_j |Si(n_j x) - Si(n_{j-1} x)|`` with ``n_0 = 0``."""
    n = np.ascontiguousarray(ns, dtype=np.float64)
    x = np.ascontiguousarray(xs, dtype=np.float64)
    out = np.empty(len(x))
    step = max(1, _CHUNK // max(1, len(n)))
    for i in range(0, len(x), step):
        xx = x[i:i + step]
        vals = sici(np.outer(xx, n))[0]
        diffs = np.diff(vals, axis=1, prepend=0.0)
        out[i:i + step] = np.abs(diffs).sum(axis=1)
    return out


def dirichlet_integral(n, xs):
    """``x/2 + sum_{m=1}^{n} sin(2 pi m x) / (2 pi m)`` at every ``x``."""
    x = np.ascontiguousarray(xs, dtype=np.float64)
    m = np.arange(1, int(n) + 1, dtype=np.float64)
    out = np.empty(len(x))
    step = max(1, _CHUNK // max(1, len(m)))
    for i in range(0, len(x), step):
        xx = x[i:i + step]
        s = np.sin(2.0 * np.pi * np.outer(xx, m)) / (2.0 * np.pi * m)
        out[i:i + step] = xx / 2.0 + s.sum(axis=1)
    return out
