"""Periodic structure of coefficient sequences.

* :func:`find_periodic_partition` splits ``a_0..a_N`` greedily into runs on
  which ``a_n = a_{n+P}``;
* :func:`window_space` computes the exact span of the length-``b`` windows of a
  sequence and an annihilating vector when the span is deficient;
* :func:`decompose_periodic` writes a sequence satisfying the recurrence of an
  annihilator as a sum ``sum_j alpha_j omega_j^r`` over the roots of unity
  among the annihilator's roots, with exact cyclotomic constants;
* :func:`companion` builds the monic polynomial ``Q`` whose cosine form
  vanishes at slightly perturbed sign changes of ``g``;
* :func:`sparse_product` counts the nonzero coefficients of
  ``F = G Q (z^d' - 1)^2``;
* :func:`structure_pipeline` turns the zero runs of ``F`` into a periodic
  partition with ``P = d'``.

Indexing: ``G(z) = sum_m b_m z^m`` with ``G(e^{it}) e^{-iNt} = 2 g(t)``, so
``b_{N +- n} = a_n`` for ``n >= 1`` and ``b_N = 2 a_0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from flint import fmpq_poly, fmpz_mat, fmpz_poly
from mpmath import mp, mpf

from .cyclotomic import CyclotomicElement, RootOfUnity, unity_root_orders
from .errors import (
    DecompositionFailed,
    EpsilonSearchFailed,
    InconsistentPartition,
    InvalidP,
    NoStructureFound,
    NoUnityRoots,
    RangeTooShort,
)
from .poly import CosinePoly, LaurentPoly, as_scalar
from .smoothing import PeriodicPartition
from .zeros import sign_change_points, zero_counts

# --------------------------------------------------------------------------
# periodic partitions


def _is_periodic(a, lo: int, hi: int, P: int) -> bool:
    return all(a[n] == a[n - P] for n in range(lo + P, hi + 1))


def find_periodic_partition(coeffs, P: int) -> PeriodicPartition:
    """Left-greedy maximal runs with ``a_n = a_{n+P}``; this minimizes the number of runs."""
    if not isinstance(P, int) or P < 1:
        raise InvalidP(f"P must be a positive integer, got {P!r}")
    a = [as_scalar(c) for c in coeffs]
    intervals = []
    s = 0
    for n in range(len(a)):
        if n - P >= s and a[n] != a[n - P]:
            intervals.append((s, n - 1))
            s = n
    if a:
        intervals.append((s, len(a) - 1))
    return PeriodicPartition.build(a, intervals, P)


def coalesce(coeffs, partition: PeriodicPartition) -> PeriodicPartition:
    """Merge neighbouring intervals left to right while the union stays ``P``-periodic."""
    a = [as_scalar(c) for c in coeffs]
    P = partition.P
    out = []
    for lo, hi in partition.intervals:
        if out and _is_periodic(a, out[-1][0], hi, P):
            out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return PeriodicPartition.build(a, out, P)


# --------------------------------------------------------------------------
# window spaces


def _integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for c in row:
            den = lcm(den, c.denominator)
        out.append([int(c * den) for c in row])
    return out


def _primitive(vec) -> tuple:
    vec = [Fraction(int(v)) for v in vec]
    den = 1
    for v in vec:
        den = lcm(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    first = next(v for v in ints if v != 0)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(Fraction(v) for v in ints)


@dataclass(frozen=True)
class WindowSpace:
    """Span of the windows ``(x(r), ..., x(r+b-1))`` for ``u <= r <= v-b+1``."""

    b: int
    u: int
    v: int
    windows: tuple  # distinct windows, in order of first appearance
    dim: int
    annihilator: tuple | None
    perp: tuple = ()  # basis of the orthogonal complement

    def annihilates(self, c) -> bool:
        return all(sum(ci * wi for ci, wi in zip(c, w)) == 0 for w in self.windows)


def window_space(coeffs, b: int, u: int, v: int) -> WindowSpace:
    """Exact rank of the ``b``-windows of ``coeffs`` inside ``[u, v]``."""
    if b < 1:
        raise ValueError("window length must be positive")
    if v - u < b:
        raise RangeTooShort(f"range [{u}, {v}] too short for windows of length {b}")
    a = [as_scalar(c) for c in coeffs]
    if u < 0 or v >= len(a):
        raise RangeTooShort(f"range [{u}, {v}] outside the sequence of length {len(a)}")
    seen = {}
    for r in range(u, v - b + 2):
        w = tuple(a[r:r + b])
        seen.setdefault(w, None)
    windows = tuple(seen)
    mat = fmpz_mat(_integer_rows(windows))
    rank = mat.rank()
    perp = ()
    if rank < b:
        basis, nullity = mat.nullspace()
        perp = tuple(_primitive([basis[i, j] for i in range(b)]) for j in range(nullity))
    ann = perp[0] if perp else None
    return WindowSpace(b, u, v, windows, rank, ann, perp)


# --------------------------------------------------------------------------
# decomposition into periodic components


def order_bound(b: int) -> int:
    """Largest root-of-unity order tested for windows of length ``b``."""
    return math.ceil(4 * b * max(1.0, math.log(math.log(b)) if b > 2 else 0.0))


@dataclass(frozen=True)
class PeriodicComponent:
    alpha: CyclotomicElement  # in Q(zeta_L) for the common order L
    omega: RootOfUnity
    p: int  # exact period of omega^r


def decompose_periodic(coeffs, annihilator, u: int, v: int) -> list[PeriodicComponent]:
    """Write ``x(r) = sum_j alpha_j omega_j^r`` on ``[u+b, v-b]`` exactly.

    Only roots of unity that are roots of ``sum_i c_i z^i`` are used (``c`` is
    the annihilator).  Components with ``alpha_j = 0`` are dropped.
    """
    a = [as_scalar(c) for c in coeffs]
    c = [as_scalar(x) for x in annihilator]
    b = len(c)
    for r in range(u, v - b + 2):
        if sum(ci * a[r + i] for i, ci in enumerate(c)) != 0:
            raise DecompositionFailed(f"annihilator fails on the window at {r}")
    orders = unity_root_orders(c, order_bound(b))
    if not orders:
        raise NoUnityRoots("no cyclotomic factor divides the annihilator polynomial")
    L = 1
    for p in orders:
        L = lcm(L, p)
    lo, hi = u + b, v - b
    if hi - lo + 1 < L:
        raise DecompositionFailed(f"range [{lo}, {hi}] shorter than the common order {L}")
    roots = [RootOfUnity(k, p) for p in orders for k in range(p) if gcd(k, p) == 1 or p == 1]
    comps = []
    for w in roots:
        e = w.exponent_in(L)
        acc = fmpq_poly([0])
        for s in range(lo, lo + L):
            if a[s]:
                acc += fmpq_poly([0] * ((-e * s) % L) + [1]) * _fq(a[s])
        alpha = CyclotomicElement(L, acc * _fq(Fraction(1, L)))
        if not alpha.is_zero():
            comps.append(PeriodicComponent(alpha, w, w.p))
    # the reconstruction has period L: check one period exactly, then periodicity
    for s in range(lo, lo + L):
        val = CyclotomicElement.rational(L, 0)
        for comp in comps:
            val = val + comp.alpha * CyclotomicElement.zeta_power(L, comp.omega.exponent_in(L) * s)
        if val.rational_value() != a[s]:
            raise DecompositionFailed(f"reconstruction differs from x({s})")
    for s in range(lo + L, hi + 1):
        if a[s] != a[s - L]:
            raise DecompositionFailed(f"x({s}) != x({s - L}): not periodic on the range")
    return comps


def _fq(x: Fraction):
    from flint import fmpq

    return fmpq(x.numerator, x.denominator)


def reconstruct(components, r: int) -> CyclotomicElement:
    L = components[0].alpha.L
    val = CyclotomicElement.rational(L, 0)
    for comp in components:
        val = val + comp.alpha * CyclotomicElement.zeta_power(L, comp.omega.exponent_in(L) * r)
    return val


# --------------------------------------------------------------------------
# companion polynomial

_EPS_BITS = 40
_EPS_GRID = 64
_COMPANION_PREC = 256
_ROOT_WIDTH = Fraction(1, 1 << 160)


def epsilon_candidates(count: int = _EPS_GRID) -> list[Fraction]:
    """Dyadic rationals ``2^-40 (1 + k/count)`` for ``0 <= k < count``."""
    return [Fraction(count + k, count << _EPS_BITS) for k in range(count)]


@dataclass(frozen=True)
class CompanionPoly:
    d: int
    roots_t: tuple  # isolating intervals (lo, hi) of the sign changes
    epsilon: Fraction
    poly: tuple  # z-form coefficients, constant first; monic of degree 2d
    cosine: tuple  # cosine-form coefficients of Q(e^{it}) e^{-itd}
    condition: tuple | None = None  # (lhs, rhs, err) of the correlation check

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    @property
    def exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.poly)

    def cos_value(self, t):
        """``2^d prod_j (cos t - cos(t_j + eps))`` via the cosine coefficients."""
        with mp.workprec(_COMPANION_PREC):
            return sum((_mpq(c) if isinstance(c, Fraction) else c) * mp.cos(n * t)
                       for n, c in enumerate(self.cosine))


def _mpq(x: Fraction):
    return mpf(x.numerator) / x.denominator


def _zform_from_cosines(cosines, one) -> list:
    poly = [one]
    for cv in cosines:
        c = -2 * cv
        nxt = [one * 0] * (len(poly) + 2)
        for i, p in enumerate(poly):
            nxt[i] += p
            nxt[i + 1] += c * p
            nxt[i + 2] += p
        poly = nxt
    return poly


def _cosine_from_zform(poly, d: int) -> list:
    # palindromic: Q(e^{it}) e^{-itd} = q_d + sum_m 2 q_{d+m} cos(m t)
    return [poly[d]] + [2 * poly[d + m] for m in range(1, d + 1)]


def companion_from_angles(thetas, epsilon=Fraction(0), roots_t=()) -> CompanionPoly:
    """Companion polynomial with cosine form ``2^d prod (cos t - cos theta_j)``."""
    with mp.workprec(_COMPANION_PREC):
        th = [mpf(t) if not isinstance(t, Fraction) else _mpq(t) for t in thetas]
        z = _zform_from_cosines([mp.cos(t) for t in th], mpf(1))
        cos_form = _cosine_from_zform(z, len(th))
    return CompanionPoly(len(th), tuple(roots_t), Fraction(epsilon), tuple(z), tuple(cos_form))


def companion_from_cosines(cosines, epsilon=Fraction(0), roots_t=()) -> CompanionPoly:
    """Exact companion polynomial from rational values ``cos(theta_j)``."""
    cs = [as_scalar(c) for c in cosines]
    z = _zform_from_cosines(cs, Fraction(1))
    return CompanionPoly(len(cs), tuple(roots_t), Fraction(epsilon), tuple(z), tuple(_cosine_from_zform(z, len(cs))))


def _cos_mul(p, q) -> list:
    """Product of cosine-form coefficient lists."""
    out = [mpf(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if not b:
                continue
            s = a * b / 2
            out[i + j] += s
            out[abs(i - j)] += s
    # cos(0)*cos(0) was split in halves into out[0] twice: correct
    return out


def _antiderivative(cs, t):
    x = mp.cos(t)
    b1 = mpf(0)
    b2 = mpf(0)
    for k in range(len(cs) - 1, 0, -1):
        b1, b2 = cs[k] / k + 2 * x * b1 - b2, b1
    return cs[0] * t + mp.sin(t) * b1


def correlation_condition(g: CosinePoly, comp: CompanionPoly, d_prime: int, breaks):
    """``(lhs, rhs, err)`` for ``|int h| >= (1/2) int |h|`` over a period.

    ``h(t) = g(t) (2 cos(d't) - 2) Q_cos(t)``; both sides are exact
    antiderivative differences, split at ``breaks`` (the sign changes of ``h``
    in ``(0, pi)``).
    """
    with mp.workprec(_COMPANION_PREC):
        gc = [_mpq(c) for c in g.coeffs]
        w = [mpf(0)] * (d_prime + 1)
        w[0] = mpf(-2)
        w[d_prime] += 2
        h = _cos_mul(_cos_mul(gc, w), list(comp.cosine))
        lhs = 2 * mp.pi * abs(h[0])
        pts = [mpf(0)] + sorted(breaks) + [mp.pi]
        H = [_antiderivative(h, t) for t in pts]
        rhs = sum(abs(H[i + 1] - H[i]) for i in range(len(H) - 1))
        sup = sum(abs(c) for c in h)
        err = 2 * len(pts) * sup * _mpq(_ROOT_WIDTH) + sup * mpf(2) ** (-_COMPANION_PREC + 32)
    return lhs, rhs, err


def _not_rational_pi(theta) -> bool:
    r = theta / mp.pi
    approx = Fraction(str(mp.nstr(r, 70))).limit_denominator(10**6)
    return abs(r - _mpq(approx)) > mpf(2) ** -100


def companion(g: CosinePoly, d_prime: int = 1, eps_budget: int = _EPS_GRID) -> CompanionPoly:
    """Search ``eps`` on the dyadic grid for a companion passing the correlation check."""
    roots = sign_change_points(g, _ROOT_WIDTH)
    d = len(roots)
    if d == 0:
        raise ValueError("g has no sign changes")
    with mp.workprec(_COMPANION_PREC):
        ts = [(_mpq(lo) + _mpq(hi)) / 2 for lo, hi in roots]
        for eps in epsilon_candidates(eps_budget):
            e = _mpq(eps)
            thetas = [t + e for t in ts]
            if not all(_not_rational_pi(th) for th in thetas):
                continue
            comp = companion_from_angles(thetas, eps, roots)
            breaks = ts + [th for th in thetas if th < mp.pi]
            lhs, rhs, err = correlation_condition(g, comp, d_prime, breaks)
            if lhs - err >= rhs / 2 + err:
                return CompanionPoly(comp.d, comp.roots_t, comp.epsilon, comp.poly, comp.cosine,
                                     (float(lhs), float(rhs / 2), float(err)))
    raise EpsilonSearchFailed(f"no epsilon among {eps_budget} candidates satisfies the correlation check")


# --------------------------------------------------------------------------
# sparse product


def g_zform(g: CosinePoly) -> fmpz_poly:
    """Integer ``G`` (up to a positive rational factor) with ``G(e^{it}) e^{-iNt} = 2 g(t) * const``."""
    N = g.degree
    den = 1
    for c in g.coeffs:
        den = lcm(den, c.denominator)
    b = [0] * (2 * N + 1)
    for n, c in enumerate(g.coeffs):
        v = int(c * den)
        if n == 0:
            b[N] = 2 * v
        else:
            b[N + n] = v
            b[N - n] = v
    return fmpz_poly(b)


def carrier(d_prime: int) -> fmpz_poly:
    """``(z^d' - 1)^2``."""
    return fmpz_poly([-1] + [0] * (d_prime - 1) + [1]) ** 2


def _zero_runs(nonzero: list[bool]) -> list[tuple[int, int]]:
    runs = []
    start = None
    for i, nz in enumerate(nonzero):
        if not nz and start is None:
            start = i
        elif nz and start is not None:
            runs.append((start, i - 1))
            start = None
    if start is not None:
        runs.append((start, len(nonzero) - 1))
    return runs


@dataclass(frozen=True)
class SparseProduct:
    F: object  # LaurentPoly when exact, otherwise a tuple of mpf coefficients
    q: int
    d_prime: int
    zero_runs: tuple
    exact: bool
    support_bound: int  # nonzero count of H = G (z^d'-1)^2 dilated by deg Q

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "d_prime": self.d_prime,
            "exact": self.exact,
            "support_bound": self.support_bound,
            "zero_runs": [list(r) for r in self.zero_runs],
        }


def _dilated_count(nonzero_idx, width: int, length: int) -> int:
    marks = [False] * length
    for m in nonzero_idx:
        for k in range(width + 1):
            marks[m + k] = True
    return sum(marks)


def sparse_product(g: CosinePoly, Q, d_prime: int) -> SparseProduct:
    """``F = G Q (z^d' - 1)^2`` with its exact nonzero count and zero runs.

    ``Q`` is a :class:`CompanionPoly` or a sequence of exact z-form
    coefficients (constant first).  With an exact ``Q`` everything is exact.
    With a numerical companion the coefficients are computed at 256 bits and
    a coefficient counts as zero below ``2^-128`` times the coefficient scale.
    """
    if d_prime < 1:
        raise ValueError("d' must be >= 1")
    H = g_zform(g) * carrier(d_prime)
    hco = [int(c) for c in H.coeffs()]
    qco = list(Q.poly) if isinstance(Q, CompanionPoly) else list(Q)
    exact = all(isinstance(c, (int, Fraction)) for c in qco)
    if exact:
        qco = [as_scalar(c) for c in qco]
    length = len(hco) + len(qco) - 1
    bound = _dilated_count([i for i, c in enumerate(hco) if c], len(qco) - 1, length)
    if exact:
        prod = fmpq_poly(hco) * fmpq_poly([_fq(c) for c in qco])
        cs = [Fraction(int(c.p), int(c.q)) for c in prod.coeffs()]
        cs += [Fraction(0)] * (length - len(cs))
        nonzero = [c != 0 for c in cs]
        F = LaurentPoly({i: c for i, c in enumerate(cs) if c})
    else:
        with mp.workprec(_COMPANION_PREC):
            cs = [mpf(0)] * length
            for i, h in enumerate(hco):
                if h:
                    for j, qv in enumerate(qco):
                        cs[i + j] += h * qv
            scale = max(abs(c) for c in cs)
            cut = scale * mpf(2) ** -128
            nonzero = [abs(c) > cut for c in cs]
            F = tuple(cs)
    return SparseProduct(F, sum(nonzero), d_prime, tuple(_zero_runs(nonzero)), exact, bound)


# --------------------------------------------------------------------------
# pipeline


@dataclass(frozen=True)
class StructureResult:
    partition: PeriodicPartition
    raw: PeriodicPartition  # before coalescing
    d: int
    d_prime: int
    q_by_dprime: dict  # d' -> (q_F, len_F, q_H)
    carrier: str  # "F" or "H"
    long_intervals: tuple  # (x, y) of the accepted long intervals
    cores: tuple  # periodic cores found by decomposition
    greedy_K: int  # minimal K for this P (find_periodic_partition)
    notes: tuple = field(default_factory=tuple)


def _bad_windows(a, coeffs_c) -> list[bool]:
    """``bad[n]`` iff the window ``a[n-D..n]`` is not annihilated by ``c`` (``n >= D``)."""
    D = len(coeffs_c) - 1
    bad = [True] * len(a)
    for n in range(D, len(a)):
        s = sum(coeffs_c[k] * a[n - k] for k in range(D + 1) if coeffs_c[k])
        bad[n] = bool(s != 0) if not isinstance(s, mpf) else abs(s) > mpf(2) ** -128 * (1 + abs(s))
    return bad


def _good_runs(bad: list[bool], D: int) -> list[tuple[int, int]]:
    """Greedy intervals on which every full window of length ``D+1`` is good."""
    runs = []
    s = 0
    for n in range(D, len(bad)):
        if bad[n] and n - D >= s:
            runs.append((s, n - 1))
            s = n
    runs.append((s, len(bad) - 1))
    return runs


def _numeric_window_bad(a, qco, d_prime) -> list[bool]:
    with mp.workprec(_COMPANION_PREC):
        c = [mpf(0)] * (len(qco) + 2 * d_prime)
        car = [1] + [0] * (d_prime - 1) + [-2] + [0] * (d_prime - 1) + [1]
        for i, x in enumerate(qco):
            for j, y in enumerate(car):
                if y:
                    c[i + j] += x * y
        scale = max(abs(x) for x in c) * max(1, max(abs(v) for v in a))
        D = len(c) - 1
        bad = [True] * len(a)
        for n in range(D, len(a)):
            s = sum(c[k] * _mpq(a[n - k]) for k in range(D + 1) if a[n - k])
            bad[n] = abs(s) > scale * mpf(2) ** -128
    return bad


def _dprime_q(g: CosinePoly, d: int, d_prime: int) -> tuple[int, int, int]:
    """``(q_F, len_F, q_H)``: generic nonzero count and length of ``F``, exact count of ``H``."""
    H = g_zform(g) * carrier(d_prime)
    idx = [i for i, c in enumerate(H.coeffs()) if c]
    length = H.degree() + 1 + 2 * d
    return _dilated_count(idx, 2 * d, length), length, len(idx)


def choose_d_prime(qs: dict) -> int:
    """Minimize ``q_F``; if ``F`` is dense for every ``d'``, minimize ``q_H`` instead."""
    if all(qf == n for qf, n, _ in qs.values()):
        return min(qs, key=lambda dp: (qs[dp][2], dp))
    return min(qs, key=lambda dp: (qs[dp][0], qs[dp][2], dp))


def analyze_structure(g: CosinePoly, d_prime_bound: int, min_long: int | None = None,
                      carrier_mode: str = "auto") -> StructureResult:
    """Derive a periodic partition of ``g``'s coefficients from the zero runs of ``F``.

    ``d'`` minimizes ``q`` over ``1..d_prime_bound``.  Runs of annihilated
    windows of length at least ``3D + 1`` (``D`` the carrier degree) are long;
    each is decomposed exactly with the annihilator ``(z^d' - 1)^2`` and its
    periodic core becomes one interval; everything else becomes unit
    intervals.  The partition is then coalesced.  The ``F`` carrier is used
    when a long ``F`` run can exist at all, else ``H = G (z^d' - 1)^2``.
    """
    if d_prime_bound < 1:
        raise ValueError("d_prime_bound must be >= 1")
    a = list(g.coeffs)
    N = len(a) - 1
    d = zero_counts(g)[1]
    qs = {dp: _dprime_q(g, d, dp) for dp in range(1, d_prime_bound + 1)}
    d_prime = choose_d_prime(qs)
    notes = []
    use_f = carrier_mode == "F" or (carrier_mode == "auto" and d >= 1
                                    and 3 * (2 * d + 2 * d_prime) + 1 <= N + 1)
    H_c = [1] + [0] * (d_prime - 1) + [-2] + [0] * (d_prime - 1) + [1]
    b = len(H_c)
    found = None
    if use_f:
        try:
            comp = companion(g, d_prime)
            D = 2 * d + 2 * d_prime
            bad = _numeric_window_bad(a, list(comp.poly), d_prime)
            found = ("F", D, bad)
        except EpsilonSearchFailed as exc:
            notes.append(f"F carrier unavailable: {exc}")
    else:
        notes.append("F carrier skipped: no run of length 3D+1 fits")
    attempts = [found] if found else []
    D_H = 2 * d_prime
    attempts.append(("H", D_H, _bad_windows(a, H_c)))
    for name, D, bad in attempts:
        threshold = min_long if min_long is not None else 3 * D + 1
        longs, cores = [], []
        for x, y in _good_runs(bad, D):
            if y - x + 1 < threshold or y - x < b:
                continue
            try:
                decompose_periodic(a, H_c, x, y)
            except (DecompositionFailed, NoUnityRoots) as exc:
                notes.append(f"{name} run [{x}, {y}] rejected: {exc}")
                continue
            if x + b > y - b:
                continue
            longs.append((x, y))
            cores.append((x + b, y - b))
        if cores:
            break
        notes.append(f"{name} carrier: no long run")
    else:
        raise NoStructureFound(f"no long run for d' = {d_prime} (q_F, len_F, q_H = {qs[d_prime]})")
    intervals = []
    n = 0
    for lo, hi in cores:
        while n < lo:
            intervals.append((n, n))
            n += 1
        intervals.append((lo, hi))
        n = hi + 1
    while n <= N:
        intervals.append((n, n))
        n += 1
    raw = PeriodicPartition.build(a, intervals, d_prime)
    raw.check(a)
    part = coalesce(a, raw)
    part.check(a)
    greedy = find_periodic_partition(a, d_prime)
    if part.K < greedy.K:
        raise InconsistentPartition("partition beats the greedy minimum; periodicity check is broken")
    return StructureResult(part, raw, d, d_prime, qs, name, tuple(longs), tuple(cores), greedy.K, tuple(notes))


def structure_pipeline(g: CosinePoly, d_prime_bound: int) -> PeriodicPartition:
    return analyze_structure(g, d_prime_bound).partition
