"""Exact cosine polynomials and their Laurent (complex exponential) forms.

A cosine polynomial ``p(t) = sum_n a_n cos(n t)`` is stored as a tuple of
:class:`fractions.Fraction` coefficients.  Its Laurent form stores the
Fourier coefficients ``p_hat(m)`` for ``-N <= m <= N`` so that
``p(t) = sum_m p_hat(m) exp(i m t)``.  When the variable is rescaled by
``2 pi`` (``t -> 2 pi t``) the same coefficients describe
``sum_m p_hat(m) e(m t)`` with ``e(x) = exp(2 pi i x)``; nothing in this
module depends on which scaling the caller has in mind.
"""

from __future__ import annotations

import json
import os
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from mpmath import iv, mp, mpf

Scalar = Fraction
Angle = Union[int, float, Fraction, "mpf"]

DEFAULT_PRECISION = float(os.environ.get("COSLAB_PRECISION", "1e-12"))


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return Fraction(int(x[0]), int(x[1]))
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


@dataclass(frozen=True)
class CoeffSet:
    """A finite set S of integer coefficient values together with M(S)."""

    values: frozenset

    def __post_init__(self):
        if not self.values:
            raise ValueError("coefficient set must be nonempty")
        object.__setattr__(self, "values", frozenset(int(v) for v in self.values))

    @property
    def M(self) -> int:
        return max(abs(v) for v in self.values)

    @classmethod
    def of(cls, p: "CosinePoly") -> "CoeffSet":
        """Smallest set containing every coefficient of ``p`` (which must be integral)."""
        vals = set()
        for c in p.coeffs:
            if c.denominator != 1:
                raise ValueError("coefficient set needs integer coefficients")
            vals.add(int(c))
        return cls(frozenset(vals))


@dataclass(frozen=True)
class CosinePoly:
    """``sum_{n=0}^{N} a_n cos(n t)`` with exact rational ``a_n``.

    Trailing zeros are stripped on construction; the zero polynomial is kept
    as the single coefficient ``(0,)`` and reports degree ``-1``.
    """

    coeffs: tuple

    def __post_init__(self):
        cs = [as_scalar(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_set(cls, A: Iterable[int]) -> "CosinePoly":
        """``f_A(t) = sum_{n in A} cos(n t)``."""
        A = sorted(set(int(n) for n in A))
        if A and A[0] < 0:
            raise ValueError("frequencies must be non-negative")
        if not A:
            return cls((0,))
        cs = [0] * (A[-1] + 1)
        for n in A:
            cs[n] = 1
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        if self.is_zero():
            return -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: "CosinePoly") -> "CosinePoly":
        n = max(len(self), len(other))
        return CosinePoly(tuple(self[i] + other[i] for i in range(n)))

    def __neg__(self) -> "CosinePoly":
        return CosinePoly(tuple(-c for c in self.coeffs))

    def scale(self, s) -> "CosinePoly":
        s = as_scalar(s)
        return CosinePoly(tuple(s * c for c in self.coeffs))

    def support(self) -> list:
        return [n for n, c in enumerate(self.coeffs) if c != 0]

    def l1_coeffs(self) -> Fraction:
        """``sum |a_n|``, a bound on ``sup |p|``."""
        return sum((abs(c) for c in self.coeffs), Fraction(0))

    def to_json(self) -> dict:
        return {"coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "CosinePoly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(as_scalar(c) for c in obj["coeffs"]))


@dataclass(frozen=True)
class LaurentPoly:
    """Finitely supported map ``m -> c_m`` read as ``sum_m c_m z^m``."""

    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(m): as_scalar(c) for m, c in dict(self.coeffs).items()}
        clean = {m: c for m, c in sorted(clean.items()) if c != 0}
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs.get(m, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __repr__(self):
        return f"LaurentPoly({dict(self.coeffs)!r})"

    @property
    def min_freq(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    @property
    def max_freq(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def is_symmetric(self) -> bool:
        return all(self[-m] == c for m, c in self.coeffs.items())

    def nnz(self) -> int:
        return len(self.coeffs)


def value_at_zero(p: CosinePoly) -> Fraction:
    """``p(0) = sum_n a_n``, exactly."""
    return sum(p.coeffs, Fraction(0))


def to_laurent(p: CosinePoly) -> LaurentPoly:
    out = {0: p[0]}
    for n in range(1, len(p.coeffs)):
        half = p.coeffs[n] / 2
        out[n] = half
        out[-n] = half
    return LaurentPoly(out)


def to_cosine(q: LaurentPoly) -> CosinePoly:
    """Inverse of :func:`to_laurent`; ``q`` must be symmetric (``c_{-m} = c_m``)."""
    if not q.is_symmetric():
        raise ValueError("Laurent polynomial is not real-even; no cosine form")
    top = max((abs(m) for m in q.coeffs), default=0)
    cs = [q[0]] + [2 * q[n] for n in range(1, top + 1)]
    return CosinePoly(tuple(cs))


def multiply(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact schoolbook product of two Laurent polynomials."""
    out: dict = {}
    for m, a in p.coeffs.items():
        for k, b in q.coeffs.items():
            out[m + k] = out.get(m + k, 0) + a * b
    return LaurentPoly(out)


def laurent_from_dense(coeffs: Sequence, offset: int = 0) -> LaurentPoly:
    """Build ``sum_i coeffs[i] z^(i + offset)``."""
    return LaurentPoly({i + offset: c for i, c in enumerate(coeffs)})


# --------------------------------------------------------------------------
# certified evaluation


@dataclass(frozen=True)
class Enclosure:
    """A real number known to lie in ``[value - radius, value + radius]``."""

    value: mpf
    radius: mpf

    @property
    def lo(self):
        return self.value - self.radius

    @property
    def hi(self):
        return self.value + self.radius

    def sign(self) -> int:
        """Certified sign: ``+1``/``-1`` if the enclosure excludes 0, else ``0``."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __float__(self):
        return float(self.value)


@contextmanager
def iv_workprec(prec: int):
    """Temporarily set the working precision (bits) of mpmath's interval context."""
    saved = iv.prec
    iv.prec = prec
    try:
        yield
    finally:
        iv.prec = saved


def _iv_angle(t):
    if isinstance(t, iv.mpf):
        return t
    if isinstance(t, Fraction):
        return iv.mpf(t.numerator) / t.denominator
    if isinstance(t, int):
        return iv.mpf(t)
    if isinstance(t, float):
        return iv.mpf(t)
    if isinstance(t, mpf):
        return iv.mpf(t)
    if isinstance(t, tuple) and len(t) == 2:
        lo, hi = t
        return iv.mpf([_iv_angle(lo).a, _iv_angle(hi).b])
    raise TypeError(f"unsupported angle type {type(t).__name__}")


def _iv_scalar(c: Fraction):
    if c.denominator == 1:
        return iv.mpf(c.numerator)
    return iv.mpf(c.numerator) / c.denominator


def _interval_to_enclosure(s) -> Enclosure:
    with mp.workprec(iv.prec + 16):
        a, b = mpf(s.a), mpf(s.b)
        mid = (a + b) / 2
        rad = max(b - mid, mid - a)
    return Enclosure(mid, rad)


def evaluate(p: CosinePoly, t: Angle, precision: float | None = None) -> Enclosure:
    """Evaluate ``p(t)`` with a certified absolute error radius.

    Each term ``a_n cos(n t)`` is computed in interval arithmetic; the working
    precision is raised until the enclosure radius is at most ``precision``.
    ``t`` may be an int, float, Fraction, mpf, or an ``iv.mpf`` interval (in
    which case the radius also reflects the width of ``t`` and the loop stops
    once it no longer shrinks).
    """
    tol = DEFAULT_PRECISION if precision is None else float(precision)
    prec = 64
    last = None
    while True:
        with iv_workprec(prec):
            tt = _iv_angle(t)
            s = iv.mpf(0)
            for n, c in enumerate(p.coeffs):
                if c == 0:
                    continue
                if n == 0:
                    s += _iv_scalar(c)
                else:
                    s += _iv_scalar(c) * iv.cos(n * tt)
            enc = _interval_to_enclosure(s)
        if enc.radius <= tol:
            return enc
        if last is not None and enc.radius >= last * 0.5:
            # width dominated by the input interval; more bits will not help
            return enc
        last = enc.radius
        prec += 64
        if prec > 4096:
            return enc


def evaluate_laurent(q: LaurentPoly, t: Angle, precision: float | None = None):
    """Certified enclosures of the real and imaginary parts of ``sum c_m e^{imt}``."""
    tol = DEFAULT_PRECISION if precision is None else float(precision)
    prec = 64
    while True:
        with iv_workprec(prec):
            tt = _iv_angle(t)
            re = iv.mpf(0)
            im = iv.mpf(0)
            for m, c in q.coeffs.items():
                cc = _iv_scalar(c)
                if m == 0:
                    re += cc
                else:
                    re += cc * iv.cos(m * tt)
                    im += cc * iv.sin(m * tt)
            er = _interval_to_enclosure(re)
            ei = _interval_to_enclosure(im)
        if max(er.radius, ei.radius) <= tol or prec > 4096:
            return er, ei
        prec += 64


def fraction_from_mpf(x) -> Fraction:
    """Exact rational value of a finite binary float (mpf, a point of ``iv``, int or float).

    The raw mantissa and exponent are read directly, so no rounding to the
    ambient ``mp`` precision takes place.
    """
    if hasattr(x, "_mpi_"):
        a, b = x._mpi_
        if a != b:
            raise ValueError("interval is not a single point")
        raw = a
    elif hasattr(x, "_mpf_"):
        raw = x._mpf_
    elif isinstance(x, (int, float)):
        return Fraction(x)
    else:
        raise TypeError(f"cannot convert {type(x).__name__} exactly")
    sign, man, exp, _ = raw
    if not man and exp:
        raise ValueError("infinite or nan value has no rational form")
    v = Fraction(int(man) << exp) if exp >= 0 else Fraction(int(man), 1 << -exp)
    return -v if sign else v


def fraction_to_decimal(x: Fraction, max_digits: int = 400, rounding: str = "nearest") -> str:
    """Decimal rendering of ``x``.

    Exact whenever the expansion terminates within ``max_digits`` digits
    (always the case for the dyadic endpoints produced by this package);
    otherwise the last digit is rounded ``"down"``, ``"up"`` or to nearest.
    """
    x = Fraction(x)
    if rounding == "nearest":
        scaled = round(x * 10**max_digits)
    else:
        q, r = divmod(x.numerator * 10**max_digits, x.denominator)
        scaled = q + (1 if (r and rounding == "up") else 0)
    sign = "-" if scaled < 0 else ""
    ip, frac = divmod(abs(scaled), 10**max_digits)
    if frac == 0:
        return f"{sign}{ip}"
    digits = str(frac).rjust(max_digits, "0").rstrip("0")
    return f"{sign}{ip}.{digits}"


def set_to_json(A: Iterable[int]) -> list:
    return sorted(int(n) for n in set(A))
