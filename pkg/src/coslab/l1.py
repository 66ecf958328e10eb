"""L1 norms of cosine polynomials and the two sides of the smoothing sandwich.

Norms are taken in the rescaled variable: for ``p(t) = sum a_n cos(2 pi n t)``
``||p||_1 = int_0^1 |p(t)| dt = (1/pi) int_0^pi |sum a_n cos(n s)| ds``.
Sign-change counts ``d`` refer to ``(0, 1/2)`` in the rescaled variable,
which is ``(0, pi)`` in the angle returned by :mod:`coslab.zeros`.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp, mpf

from . import kernels
from .errors import IdenticallyZero
from .poly import CosinePoly, value_at_zero
from .sinint import window_sum_sup
from .smoothing import PeriodicPartition, block_form, build_tilde
from .zeros import sign_change_points, zero_counts


@dataclass(frozen=True)
class L1Value:
    value: float
    err: float

    def __float__(self):
        return self.value


def _antiderivative_mp(coeffs, s):
    """``a_0 s + sum_{n>=1} a_n sin(n s)/n`` by Clenshaw in ``cos s``."""
    x = mp.cos(s)
    b1 = mpf(0)
    b2 = mpf(0)
    for k in range(len(coeffs) - 1, 0, -1):
        b1, b2 = coeffs[k] / k + 2 * x * b1 - b2, b1
    return coeffs[0] * s + mp.sin(s) * b1


def l1_norm(p: CosinePoly, tol: float = 1e-12) -> L1Value:
    """``int_0^1 |p(t)| dt`` with a certified error radius at most ``tol``."""
    if p.is_zero():
        raise IdenticallyZero("l1 norm of the zero polynomial")
    deg = max(1, p.degree)
    # |p| <= B1 w on a root interval of width w (B1 = sum n |a_n| bounds |p'|), so a
    # misplaced breakpoint moves an antiderivative difference by at most B1 w^2
    B1 = max(1.0, float(sum(n * abs(c) for n, c in enumerate(p.coeffs))))
    w = math.sqrt(tol / (4 * deg * B1))
    width = Fraction(w).limit_denominator(1 << 80)
    points = sign_change_points(p, min(width, Fraction(1, 1 << 20)))
    bits = 64 + max(0, int(-math.log2(tol))) + (p.degree + 1).bit_length()
    with mp.workprec(bits):
        cs = [mpf(c.numerator) / c.denominator for c in p.coeffs]
        breaks = [mpf(0)] + [(mpf(lo.numerator) / lo.denominator + mpf(hi.numerator) / hi.denominator) / 2
                             for lo, hi in points] + [mp.pi]
        H = [_antiderivative_mp(cs, b) for b in breaks]
        total = sum(abs(H[i + 1] - H[i]) for i in range(len(H) - 1)) / mp.pi
        wmax = max((float(hi - lo) for lo, hi in points), default=0.0)
        err = 2 * len(points) * B1 * wmax**2 / math.pi + float(total) * 2.0**-50
    return L1Value(float(total), err)


def littlewood_lower(coeffs) -> Fraction:
    """``sum_j |a_j| / j`` for ``(amplitude, frequency)`` pairs with increasing frequencies."""
    pairs = list(coeffs)
    freqs = [f for _, f in pairs]
    if any(b <= a for a, b in zip(freqs, freqs[1:])):
        raise ValueError("frequencies must be strictly increasing")
    return sum((abs(Fraction(a)) / j for j, (a, _) in enumerate(pairs, start=1)), Fraction(0))


@dataclass(frozen=True)
class L1Report:
    norm: float
    norm_err: float
    lower_littlewood: float
    lower_lemma32: float
    upper_eqL1: float
    d: int
    M: int
    P: int
    K_tilde: int
    window_sup: float
    block_length_ok: bool  # sum_{c_j != 0} |J_j| >= |g~(0)| / (4M), exact
    ratio_low: float  # lower_lemma32 / norm
    ratio_up: float  # norm / upper_eqL1

    def to_json(self) -> dict:
        return asdict(self)


def _window_grid(size: int = 4097) -> np.ndarray:
    return np.linspace(0.0, math.pi, size)


def sandwich_report(g: CosinePoly, partition: PeriodicPartition, tol: float = 1e-10,
                    d: int | None = None) -> L1Report:
    """Both sides of the L1 sandwich for ``g~ = g k_P^2``."""
    partition.check(g.coeffs)
    P = partition.P
    M = max(abs(c) for c in g.coeffs)
    gt = build_tilde(g, P)
    bf = block_form(gt, partition, M)
    norm = l1_norm(gt, tol)
    g0 = abs(value_at_zero(g))
    lower = math.log(g0 / M) / P**2 if g0 > M else 0.0
    if d is None:
        d = zero_counts(g)[1]
    ends = bf.endpoints()
    ws = window_sum_sup(ends, _window_grid())[0] if ends else 0.0
    upper = d * float(M) * (ws + math.log(bf.K_tilde))
    spec = [(c, n) for n, c in enumerate(gt.coeffs) if c != 0]
    lw = float(littlewood_lower(spec)) if spec else 0.0
    nonzero = bf.nonzero_length()
    block_ok = nonzero >= abs(value_at_zero(gt)) / (4 * M)
    return L1Report(
        norm=norm.value,
        norm_err=norm.err,
        lower_littlewood=lw,
        lower_lemma32=lower,
        upper_eqL1=upper,
        d=d,
        M=int(M),
        P=P,
        K_tilde=bf.K_tilde,
        window_sup=ws,
        block_length_ok=bool(block_ok),
        ratio_low=lower / norm.value if norm.value > 0 else math.inf,
        ratio_up=norm.value / upper if upper > 0 else math.inf,
    )


@dataclass(frozen=True)
class AntiderivativeCheck:
    norm: float
    d: int
    grid_max: float
    padding: float
    ok: bool  # norm <= 4 d (grid_max + padding)
    ok_grid: bool  # norm <= 4 d grid_max, i.e. without the padding


def antiderivative_sup_check(p: CosinePoly, norm: float | None = None) -> AntiderivativeCheck:
    """Compare ``||p||_1`` with ``4 d sup |G|`` where ``G(x) = int_0^x p(t) dt`` on ``[0, 1]``.

    ``sup |G|`` is sampled on ``8 deg`` points; since ``|G'| = |p| <= sum |a_n|``
    half a grid step times that sum pads the sample to an upper bound.
    """
    if norm is None:
        norm = l1_norm(p).value
    d = zero_counts(p)[1]
    size = 8 * max(1, p.degree) + 1
    xs = np.linspace(0.0, 1.0, size)
    cs = np.array([float(c) for c in p.coeffs])
    G = kernels.cos_antiderivative(cs, 2 * np.pi * xs) / (2 * np.pi)
    grid_max = float(np.max(np.abs(G)))
    pad = 0.5 / (size - 1) * float(p.l1_coeffs())
    return AntiderivativeCheck(
        norm=norm, d=d, grid_max=grid_max, padding=pad,
        ok=norm <= 4 * d * (grid_max + pad), ok_grid=norm <= 4 * d * grid_max,
    )
