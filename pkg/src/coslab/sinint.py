"""Sine integral, Dirichlet-kernel integrals and window sums.

``si`` is certified: every value carries an absolute error radius that
accounts for truncation (series tails, quadrature error, asymptotic
remainders) plus a generous allowance for rounding at 113-bit working
precision.  Three regimes are used for ``x >= 0``:

* ``x <= 4``: the alternating Taylor series, whose terms decrease from the
  start, so the tail is bounded by the first omitted term;
* ``4 < x <= 40``: ``Si(4)`` plus 10-point Gauss-Legendre panels of width at
  most 1 over ``[4, x]``.  Since ``sin(t)/t = int_0^1 cos(s t) ds`` every
  derivative of the integrand is bounded by 1, which makes the classical
  Gauss-Legendre remainder formula an explicit bound (below 1e-30 per panel);
* ``x > 40``: ``Si(x) = pi/2 - f(x) cos x - g(x) sin x`` with the
  asymptotic series of the auxiliary functions ``f`` and ``g``; both are
  Laplace transforms of ``1/(1+t^2)`` (resp. ``t/(1+t^2)``) so each
  truncation error is bounded by the first omitted term.

Sweeps over large grids use the float64 kernels in :mod:`coslab.kernels`;
the tests tie those kernels to the certified path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from mpmath import mp, mpf

from . import kernels
from .errors import ToleranceUnachievable

TOL_FLOOR = 1e-15
TAIL_CONSTANT = 4  # explicit constant C of the decay bound
_PREC = 113
_ROUND = mpf(2) ** -100  # per-operation rounding allowance, far above the true unit roundoff
_GL_ORDER = 10


@dataclass(frozen=True)
class SiValue:
    x: float
    value: float
    err: float

    def __float__(self):
        return self.value


@dataclass(frozen=True)
class WindowFamily:
    """Strictly increasing positive frequencies ``n_1 < ... < n_K`` and a point ``x`` in ``[0, pi]``."""

    n: tuple
    x: float

    def __post_init__(self):
        n = tuple(int(v) for v in self.n)
        if any(v <= 0 for v in n):
            raise ValueError("window frequencies must be positive")
        if any(b <= a for a, b in zip(n, n[1:])):
            raise ValueError("window frequencies must be strictly increasing")
        object.__setattr__(self, "n", n)


@lru_cache(maxsize=None)
def _gl_nodes(order: int = _GL_ORDER):
    with mp.workprec(_PREC + 20):
        nodes = []
        for x0, _ in zip(*np.polynomial.legendre.leggauss(order)):
            x = mpf(x0)
            for _ in range(8):
                p, dp = mp.legendre(order, x), mp.diff(lambda u: mp.legendre(order, u), x)
                x -= p / dp
            dp = mp.diff(lambda u: mp.legendre(order, u), x)
            w = 2 / ((1 - x * x) * dp * dp)
            nodes.append((x, w))
        return tuple(nodes)


@lru_cache(maxsize=None)
def _gl_remainder_coeff(order: int = _GL_ORDER):
    # h^(2n+1) (n!)^4 / ((2n+1) ((2n)!)^3) * max|f^(2n)|, with max|f^(2n)| <= 1
    n = order
    return mpf(math.factorial(n)) ** 4 / ((2 * n + 1) * mpf(math.factorial(2 * n)) ** 3)


def _sinc_panel(a, b):
    """Gauss-Legendre integral of sin(t)/t over ``[a, b]`` with its error bound."""
    h = (b - a) / 2
    c = (b + a) / 2
    s = mpf(0)
    for x, w in _gl_nodes():
        t = c + h * x
        s += w * mp.sin(t) / t
    err = _gl_remainder_coeff() * (b - a) ** (2 * _GL_ORDER + 1) + 40 * _ROUND * abs(h)
    return h * s, err


def sinc_integral(a, b):
    """Certified ``int_a^b sin(t)/t dt`` for ``0 < a <= b``, panels of width at most 1.

    Returns ``(value, err)`` as mpf.
    """
    with mp.workprec(_PREC):
        a = mpf(a)
        b = mpf(b)
        total = mpf(0)
        err = mpf(0)
        lo = a
        while lo < b:
            hi = min(b, lo + 1)
            v, e = _sinc_panel(lo, hi)
            total += v
            err += e
            lo = hi
        return total, err


def _si_series(x):
    x2 = x * x
    term = x  # x^(2k+1)/(2k+1)!
    total = x
    k = 0
    while True:
        k += 1
        term = -term * x2 / ((2 * k) * (2 * k + 1))
        t = term / (2 * k + 1)
        if abs(t) < mpf(2) ** -110:
            return total, abs(t) + (k + 1) * _ROUND
        total += t


def _si_asymptotic(x, tol):
    ix2 = 1 / (x * x)
    f = mpf(0)
    g = mpf(0)
    tf = mpf(1)  # (2k)!/x^(2k)
    tg = mpf(1)  # (2k+1)!/x^(2k)
    k = 0
    while True:
        rf = abs(tf) / x
        rg = abs(tg) * ix2
        if rf + rg < tol / 4 or k > 2000:
            break
        f += tf
        g += tg
        k += 1
        tf_next = -tf * (2 * k - 1) * (2 * k) * ix2
        tg_next = -tg * (2 * k) * (2 * k + 1) * ix2
        if abs(tf_next) > abs(tf) and abs(tg_next) > abs(tg):
            # past the smallest term; asymptotic series cannot do better
            tf, tg = tf_next, tg_next
            break
        tf, tg = tf_next, tg_next
    rem = abs(tf) / x + abs(tg) * ix2
    val = mp.pi / 2 - (f / x) * mp.cos(x) - (g * ix2) * mp.sin(x)
    return val, rem + (k + 8) * _ROUND


@lru_cache(maxsize=1)
def _si4():
    with mp.workprec(_PREC):
        return _si_series(mpf(4))


def _si_mp(x, tol):
    if x <= 4:
        return _si_series(x)
    if x <= 40:
        v4, e4 = _si4()
        v, e = sinc_integral(4, x)
        return v4 + v, e4 + e
    return _si_asymptotic(x, tol)


def si(x: float, tol: float = 1e-12) -> SiValue:
    """Certified sine integral ``Si(x) = int_0^x sin(t)/t dt`` for ``x >= 0``."""
    if tol < TOL_FLOOR:
        raise ToleranceUnachievable(f"tolerance {tol:g} below the floor {TOL_FLOOR:g}")
    if x < 0:
        raise ValueError("si needs x >= 0")
    with mp.workprec(_PREC):
        X = mpf(x)
        if X == 0:
            return SiValue(float(x), 0.0, 0.0)
        v, e = _si_mp(X, mpf(tol))
        # conversion of the mpf value to float adds at most half an ulp
        e = e + abs(v) * mpf(2) ** -53
    if e > tol:
        raise ToleranceUnachievable(f"Si({x}) reached only {float(e):.3g} > {tol:g}")
    return SiValue(float(x), float(v), float(e))


def si_mp(x, tol: float = 1e-30):
    """``(value, err)`` as mpf at 113-bit precision, for callers that subtract nearby values."""
    with mp.workprec(_PREC):
        X = mpf(x)
        if X == 0:
            return mpf(0), mpf(0)
        if X < 0:
            v, e = _si_mp(-X, mpf(tol))
            return -v, e
        return _si_mp(X, mpf(tol))


# --------------------------------------------------------------------------
# Dirichlet kernel integrals


def dirichlet_integral(n: int, x: float, tol: float = 1e-12) -> tuple[float, float]:
    """``int_0^x D_n(2 pi t) dt`` from the closed-form antiderivative.

    ``D_n(s) = 1/2 + sum_{m<=n} cos(m s)``, so the integral is
    ``x/2 + sum_m sin(2 pi m x)/(2 pi m)``.  Returns ``(value, err)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    bits = 64 + int(math.log2(n + 1)) + max(0, int(-math.log2(tol)))
    with mp.workprec(bits):
        X = mpf(x)
        w = 2 * mp.pi * X
        s = X / 2
        for m in range(1, n + 1):
            s += mp.sin(m * w) / (2 * mp.pi * m)
        err = (n + 2) * mpf(2) ** (-bits + 4) + abs(s) * mpf(2) ** -53
    return float(s), float(err)


def dirichlet_integral_grid(n: int, xs) -> np.ndarray:
    """Vectorized float64 version for sweeps (absolute error about ``1e-15 * log n``)."""
    return kernels.dirichlet_integral(int(n), np.asarray(xs, dtype=np.float64))


def dirichlet_si_gap(n: int, xs) -> np.ndarray:
    """``int_0^x D_n(2 pi t) dt - Si(2 pi n x)/(2 pi)`` on a grid."""
    xs = np.asarray(xs, dtype=np.float64)
    return dirichlet_integral_grid(n, xs) - kernels.si(2 * np.pi * n * xs) / (2 * np.pi)


# --------------------------------------------------------------------------
# decay bound and window sums


@dataclass(frozen=True)
class TailCheck:
    y: float
    y2: float
    lhs: float
    lhs_err: float
    rhs: float

    @property
    def ok(self) -> bool:
        """The bound is certified to hold (upper end of the lhs enclosure at most rhs)."""
        return self.lhs + self.lhs_err <= self.rhs

    @property
    def violated(self) -> bool:
        """The bound is certified to fail."""
        return self.lhs - self.lhs_err > self.rhs


def tail_bound_check(y: float, y2: float, tol: float = 1e-10, C: float = TAIL_CONSTANT) -> TailCheck:
    """Both sides of ``|int_y^{y2} sin t/t dt| <= C y^-1 min(1, y2 - y)`` for ``1 < y < y2``."""
    if not (1 < y < y2):
        raise ValueError("need 1 < y < y2")
    with mp.workprec(_PREC):
        if y2 - y <= 8:
            v, e = sinc_integral(y, y2)
        else:
            v2, e2 = si_mp(y2, tol / 4)
            v1, e1 = si_mp(y, tol / 4)
            v, e = v2 - v1, e1 + e2
        lhs = abs(v)
    if e > tol:
        raise ToleranceUnachievable(f"lhs error {float(e):.3g} exceeds {tol:g}")
    rhs = C / y * min(1.0, y2 - y)
    return TailCheck(float(y), float(y2), float(lhs), float(e) + float(lhs) * 2**-52, rhs)


def window_sum(w: WindowFamily, tol: float = 1e-10) -> float:
    """``sum_j |Si(n_j x) - Si(n_{j-1} x)|`` with ``n_0 = 0``; each term accurate to ``tol/K``."""
    K = len(w.n)
    if K == 0 or w.x == 0:
        return 0.0
    per_term = tol / K
    if per_term >= 1e-12:
        return float(kernels.window_sums(np.asarray(w.n, dtype=np.float64), np.array([w.x]))[0])
    total = mpf(0)
    prev = mpf(0)
    with mp.workprec(_PREC):
        for n in w.n:
            cur, _ = si_mp(mpf(n) * mpf(w.x), per_term / 2)
            total += abs(cur - prev)
            prev = cur
    return float(total)


def window_sum_sup(ns, xs) -> tuple[float, float]:
    """``(max_x S(x), argmax)`` over the grid ``xs`` for frequencies ``ns``."""
    vals = kernels.window_sums(np.asarray(ns, dtype=np.float64), np.asarray(xs, dtype=np.float64))
    i = int(np.argmax(vals))
    return float(vals[i]), float(np.asarray(xs)[i])
