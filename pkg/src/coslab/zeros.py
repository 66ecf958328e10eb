"""Certified zero counting for cosine polynomials.

Substituting ``x = cos t`` turns ``p(t) = sum a_n cos(n t)`` into the
algebraic polynomial ``f(x) = sum a_n T_n(x)`` (Chebyshev polynomials of
the first kind).  Real roots of ``f`` in ``[-1, 1]`` are isolated exactly:
square-free factorization, then Descartes' rule of signs with bisection
(Vincent-Collins-Akritas) on each factor, all in integer arithmetic.  Each
root ``x`` in ``(-1, 1)`` gives two zeros ``t = arccos x`` and
``2 pi - arccos x``; ``x = 1`` gives ``t = 0`` and ``x = -1`` gives
``t = pi``.

Zeros are counted in the half-open period ``[0, 2 pi)`` and are distinct
(multiplicity is reported separately).  A sign change is an interior zero
in ``(0, pi)`` of odd multiplicity; zeros at ``t = 0`` or ``t = pi`` never
count as sign changes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from flint import arb, arb_poly, ctx, fmpq, fmpq_poly, fmpz_poly
from mpmath import iv, mp, mpf

from .errors import IdenticallyZero
from .poly import CosinePoly, fraction_from_mpf, fraction_to_decimal, iv_workprec

_X_PLUS_ONE = fmpz_poly([1, 1])
_TWO_Y_MINUS_ONE = fmpz_poly([-1, 2])


@lru_cache(maxsize=4096)
def _cheb(n: int) -> fmpz_poly:
    return fmpz_poly.chebyshev_t(n)


def chebyshev_form(p: CosinePoly) -> tuple[fmpz_poly, int]:
    """Return ``(f, L)`` with ``f`` integral and ``f(cos t) = L * p(t)``."""
    L = 1
    for c in p.coeffs:
        L = lcm(L, c.denominator)
    f = fmpz_poly(0)
    for n, c in enumerate(p.coeffs):
        if c:
            f += int(c * L) * _cheb(n)
    return f, L


def _variations(q: fmpz_poly) -> int:
    last = 0
    v = 0
    for c in q.coeffs():
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if last and s != last:
            v += 1
        last = s
    return v


def _descartes01(q: fmpz_poly) -> int:
    """Upper bound (exact when 0 or 1) on roots of ``q`` in the open interval (0, 1)."""
    n = q.degree()
    cs = q.coeffs()
    cs = cs + [0] * (n + 1 - len(cs))
    rev = fmpz_poly(cs[::-1])
    return _variations(rev(_X_PLUS_ONE))


def _halve(q: fmpz_poly) -> fmpz_poly:
    # 2^n q(y/2)
    n = q.degree()
    return fmpz_poly([int(c) << (n - i) for i, c in enumerate(q.coeffs())])


def _sign(h: fmpz_poly, x: Fraction) -> int:
    v = h(fmpq(x.numerator, x.denominator))
    return (v > 0) - (v < 0)


def _to_ball(h: fmpz_poly) -> tuple[arb_poly, int]:
    """``h`` as an exact ball polynomial, with ``log2(sum |c|)``."""
    cs = [abs(int(c)) for c in h.coeffs()]
    old = ctx.prec
    ctx.prec = 64 + max((c.bit_length() for c in cs), default=0)
    try:
        return arb_poly(h), sum(cs).bit_length()
    finally:
        ctx.prec = old


def _ball_sign(h: fmpz_poly, ball: tuple[arb_poly, int], x: Fraction) -> int:
    """Sign of ``h(x)`` from a ball evaluation, falling back to exact arithmetic."""
    q = fmpq(x.numerator, x.denominator)
    old = ctx.prec
    # Horner in the monomial basis cancels heavily: cover log2(sum |c|) plus the bits of x
    hb, scale = ball
    ctx.prec = 64 + scale + 2 * max(x.numerator.bit_length(), x.denominator.bit_length())
    try:
        v = hb(arb(q))
        if v > 0:
            return 1
        if v < 0:
            return -1
    finally:
        ctx.prec = old
    return _sign(h, x)


@dataclass
class XRoot:
    """A root of ``f`` in ``[-1, 1]`` isolated in ``[lo, hi]`` (``lo == hi`` if exact)."""

    lo: Fraction
    hi: Fraction
    factor: fmpz_poly = field(repr=False)
    multiplicity: int
    sign_lo: int = 0  # sign of ``factor`` at ``lo`` when the root is not exact
    _ball: tuple | None = field(default=None, repr=False, compare=False)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def bisect(self) -> None:
        if self.exact:
            return
        m = (self.lo + self.hi) / 2
        if self._ball is None:
            self._ball = _to_ball(self.factor)
        s = _ball_sign(self.factor, self._ball, m)
        if s == 0:
            self.lo = self.hi = m
        elif s == self.sign_lo:
            self.lo = m
        else:
            self.hi = m


def _isolate_open(h: fmpz_poly) -> list[tuple[Fraction, Fraction]]:
    """Isolate the roots of square-free ``h`` in ``(-1, 1)``; ``h(+-1) != 0``.

    Returns intervals ``(lo, hi)``; ``lo == hi`` marks an exact dyadic root,
    otherwise the open interval holds exactly one root.
    """
    q0 = h(_TWO_Y_MINUS_ONE)
    out = []
    stack = [(q0, 0, 0)]
    while stack:
        q, c, k = stack.pop()
        if q.degree() <= 0:
            continue
        v = _descartes01(q)
        if v == 0:
            continue
        if v == 1:
            out.append((c, k, False))
            continue
        left = _halve(q)
        right = left(_X_PLUS_ONE)
        if right.coeffs()[0] == 0:
            out.append((2 * c + 1, k + 1, True))
            right = fmpz_poly(right.coeffs()[1:])
            left = left // fmpz_poly([-1, 1])
        stack.append((right, 2 * c + 1, k + 1))
        stack.append((left, 2 * c, k + 1))
    res = []
    for c, k, exact in out:
        den = 1 << k
        if exact:
            x = Fraction(2 * c, den) - 1
            res.append((x, x))
        else:
            res.append((Fraction(2 * c, den) - 1, Fraction(2 * (c + 1), den) - 1))
    return res


def _nonzero_endpoints(h: fmpz_poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    # shrink an isolating interval until h is nonzero at both ends; the
    # interior root is simple so the shrink by Descartes counts terminates
    while _sign(h, lo) == 0 or _sign(h, hi) == 0:
        m = (lo + hi) / 2
        if _sign(h, m) == 0:
            return m, m
        if _count_in(h, lo, m) == 1:
            hi = m
        else:
            lo = m
    return lo, hi


def _count_in(h: fmpz_poly, lo: Fraction, hi: Fraction) -> int:
    # Descartes bound on the open interval (lo, hi) through an affine map to (0, 1)
    w = hi - lo
    g = fmpq_poly(h.coeffs())(fmpq_poly([fmpq(lo.numerator, lo.denominator), fmpq(w.numerator, w.denominator)]))
    return _descartes01(g.numer())


def isolate_x_roots(p: CosinePoly) -> list[XRoot]:
    """All distinct roots of the Chebyshev form of ``p`` in ``[-1, 1]``, sorted, separated.

    Interior roots get closed isolating intervals strictly inside ``(-1, 1)``
    and pairwise disjoint.
    """
    if p.is_zero():
        raise IdenticallyZero("the zero polynomial has no isolated zeros")
    f, _ = chebyshev_form(p)
    if f.degree() <= 0:
        return []
    _, factors = f.factor_squarefree()
    roots: list[XRoot] = []
    for h, mult in factors:
        h = fmpz_poly(h)
        for end in (1, -1):
            if h(end) == 0:
                x = Fraction(end)
                roots.append(XRoot(x, x, h, int(mult)))
                h = h // fmpz_poly([-end, 1])
        if h.degree() <= 0:
            continue
        for lo, hi in _isolate_open(h):
            if lo != hi:
                lo, hi = _nonzero_endpoints(h, lo, hi)
            r = XRoot(lo, hi, h, int(mult))
            if not r.exact:
                r.sign_lo = _sign(h, lo)
            roots.append(r)
    _separate(roots)
    roots.sort(key=lambda r: r.lo)
    return roots


def _separate(roots: list[XRoot]) -> None:
    while True:
        changed = False
        for r in roots:
            if not r.exact and (r.lo <= -1 or r.hi >= 1):
                r.bisect()
                changed = True
        roots.sort(key=lambda r: (r.lo, r.hi))
        for a, b in zip(roots, roots[1:]):
            if a.hi >= b.lo:
                if a.width >= b.width and not a.exact:
                    a.bisect()
                elif not b.exact:
                    b.bisect()
                else:
                    a.bisect()
                changed = True
        if not changed:
            return


# --------------------------------------------------------------------------
# x -> t conversion with certified outward rounding


def _prec_for(width: Fraction | None) -> int:
    if width is None or width == 0:
        return 96
    bits = max(0, -(width.numerator.bit_length() - width.denominator.bit_length()))
    return max(96, bits + 48)


def _iv_frac(x: Fraction):
    return iv.mpf(x.numerator) / x.denominator


def t_interval(lo: Fraction, hi: Fraction, prec: int | None = None) -> tuple[Fraction, Fraction]:
    """Rational interval ``[t_lo, t_hi]`` containing ``arccos([lo, hi])``, outward rounded."""
    if prec is None:
        prec = _prec_for(hi - lo if hi > lo else None)
    with iv_workprec(prec), mp.workprec(prec):
        ulp = mpf(2) ** (-prec + 6)
        if hi >= 1:
            t_lo = Fraction(0)
        else:
            cand = mp.acos(mpf(hi.numerator) / hi.denominator) - ulp
            while iv.cos(iv.mpf(cand)).a < _iv_frac(hi).b:
                cand -= ulp
                ulp *= 2
            t_lo = max(Fraction(0), fraction_from_mpf(cand))
        if lo <= -1:
            t_hi = fraction_from_mpf(iv.pi.b)
        else:
            cand = mp.acos(mpf(lo.numerator) / lo.denominator) + ulp
            while iv.cos(iv.mpf(cand)).b > _iv_frac(lo).a:
                cand += ulp
                ulp *= 2
            t_hi = fraction_from_mpf(cand)
    return t_lo, t_hi


def _mirror(t_lo: Fraction, t_hi: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    with iv_workprec(prec):
        two_pi = 2 * iv.pi
        lo = fraction_from_mpf(two_pi.a) - t_hi
        hi = fraction_from_mpf(two_pi.b) - t_lo
    return lo, hi


@dataclass(frozen=True)
class Zero:
    """One distinct zero in ``[0, 2 pi)``."""

    lo: Fraction
    hi: Fraction
    multiplicity: int
    sign_change: bool


@dataclass(frozen=True)
class ZeroReport:
    zeros: tuple  # Zero records sorted by position in [0, 2 pi)
    Z: int
    sign_changes: tuple  # (lo, hi) pairs in (0, pi)
    d: int

    @property
    def multiplicities(self) -> list[int]:
        return [z.multiplicity for z in self.zeros]

    def to_json(self, digits: int = 400) -> dict:
        """Endpoints are rounded outward to ``digits`` decimals, so every pair still encloses its zero."""

        def pair(a, b):
            return [fraction_to_decimal(a, digits, rounding="down"), fraction_to_decimal(b, digits, rounding="up")]

        return {
            "Z": self.Z,
            "d": self.d,
            "zeros": [pair(z.lo, z.hi) for z in self.zeros],
            "sign_changes": [pair(a, b) for a, b in self.sign_changes],
            "multiplicities": self.multiplicities,
            "period": "[0, 2pi)",
        }


def count_zeros(p: CosinePoly, precision: float | Fraction | None = None) -> ZeroReport:
    """Count distinct zeros of ``p`` in ``[0, 2 pi)`` and sign changes in ``(0, pi)``.

    With ``precision`` every isolating interval is refined to at most that width.
    """
    roots = isolate_x_roots(p)
    if precision is not None:
        for r in roots:
            refine_root(r, precision)
    return _report(roots)


def _report(roots: list[XRoot]) -> ZeroReport:
    first, second, signs = [], [], []
    # t increases as x decreases
    for r in sorted(roots, key=lambda r: r.lo, reverse=True):
        if r.exact and r.lo == 1:
            # x = cos t is quadratic in t at the endpoints: multiplicity doubles
            first.append(Zero(Fraction(0), Fraction(0), 2 * r.multiplicity, False))
            continue
        prec = _prec_for(r.width if not r.exact else None)
        if r.exact and r.lo == -1:
            with iv_workprec(prec):
                pi = iv.pi
                first.append(Zero(fraction_from_mpf(pi.a), fraction_from_mpf(pi.b), 2 * r.multiplicity, False))
            continue
        t_lo, t_hi = t_interval(r.lo, r.hi, prec)
        odd = r.multiplicity % 2 == 1
        first.append(Zero(t_lo, t_hi, r.multiplicity, odd))
        m_lo, m_hi = _mirror(t_lo, t_hi, prec)
        second.append(Zero(m_lo, m_hi, r.multiplicity, odd))
        if odd:
            signs.append((t_lo, t_hi))
    zeros = tuple(first + second[::-1])
    return ZeroReport(zeros=zeros, Z=len(zeros), sign_changes=tuple(signs), d=len(signs))


def _t_width(r: XRoot) -> Fraction:
    if r.exact:
        return Fraction(0)
    lo, hi = t_interval(r.lo, r.hi)
    return hi - lo


def refine_root(r: XRoot, width: float | Fraction) -> tuple[Fraction, Fraction]:
    """Bisect ``r`` until its ``t``-interval is at most ``width`` wide; return that interval."""
    width = Fraction(width)
    while True:
        if r.exact:
            return t_interval(r.lo, r.hi)
        lo, hi = t_interval(r.lo, r.hi)
        if hi - lo <= width:
            return lo, hi
        # acos stretches widths by at most 1/sqrt(1-x^2); bisect in batches
        steps = max(1, (r.width / width).numerator.bit_length() - (r.width / width).denominator.bit_length())
        for _ in range(min(steps, 64)):
            r.bisect()


def sign_change_points(p: CosinePoly, precision: float = 1e-12) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals of the sign changes of ``p`` in ``(0, pi)``, increasing, each of width at most ``precision``."""
    roots = isolate_x_roots(p)
    out = []
    for r in sorted(roots, key=lambda r: r.lo, reverse=True):
        if r.multiplicity % 2 == 0 or r.lo in (-1, 1) and r.exact:
            continue
        out.append(refine_root(r, precision))
    return out


def interior_zeros(p: CosinePoly, precision: float = 1e-12) -> list[tuple[Fraction, Fraction, int]]:
    """All distinct zeros in ``(0, pi)`` as ``(lo, hi, multiplicity)``, refined to ``precision``."""
    roots = isolate_x_roots(p)
    out = []
    for r in sorted(roots, key=lambda r: r.lo, reverse=True):
        if r.exact and r.lo in (-1, 1):
            continue
        lo, hi = refine_root(r, precision)
        out.append((lo, hi, r.multiplicity))
    return out


def endpoint_signs(p: CosinePoly) -> tuple[int, int]:
    """Signs of ``p`` on ``(0, 0+)`` and ``(pi-, pi)``: the first nonzero one-sided behaviour."""
    f, _ = chebyshev_form(p)
    if f.is_zero():
        raise IdenticallyZero("zero polynomial")
    # near x = 1 (t -> 0+): x = 1 - s, s > 0 small
    g = f(fmpz_poly([1, -1]))
    s0 = _lowest_sign(g)
    # near x = -1 (t -> pi-): x = -1 + s
    h = f(fmpz_poly([-1, 1]))
    s1 = _lowest_sign(h)
    return s0, s1


def _lowest_sign(q: fmpz_poly) -> int:
    for c in q.coeffs():
        if c != 0:
            return 1 if c > 0 else -1
    return 0


def zero_counts(p: CosinePoly) -> tuple[int, int]:
    """``(Z, d)`` exactly as in :func:`count_zeros`, without mapping roots to angles."""
    Z = d = 0
    for r in isolate_x_roots(p):
        if r.exact and r.lo in (-1, 1):
            Z += 1
        else:
            Z += 2
            d += r.multiplicity % 2
    return Z, d
