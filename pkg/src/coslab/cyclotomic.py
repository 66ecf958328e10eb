"""Exact arithmetic in cyclotomic fields ``Q(zeta_L)``.

Elements are rational polynomials in ``zeta = exp(2 pi i / L)`` reduced
modulo the cyclotomic polynomial ``Phi_L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from flint import fmpq, fmpq_poly, fmpz_poly


@lru_cache(maxsize=None)
def cyclotomic_poly(L: int) -> fmpz_poly:
    return fmpz_poly.cyclotomic(L)


def _q(x: Fraction) -> fmpq:
    x = Fraction(x)
    return fmpq(x.numerator, x.denominator)


@dataclass(frozen=True)
class RootOfUnity:
    """``exp(2 pi i k / p)`` with ``gcd(k, p) = 1`` (so ``p`` is the exact order)."""

    k: int
    p: int

    def __post_init__(self):
        k = self.k % self.p
        if gcd(k, self.p) != 1 and self.p != 1:
            raise ValueError(f"{self.k}/{self.p} is not in lowest terms")
        object.__setattr__(self, "k", k)

    def exponent_in(self, L: int) -> int:
        if L % self.p:
            raise ValueError(f"order {self.p} does not divide {L}")
        return self.k * (L // self.p)

    def __complex__(self):
        import cmath

        return cmath.exp(2j * cmath.pi * self.k / self.p)


class CyclotomicElement:
    __slots__ = ("L", "poly")

    def __init__(self, L: int, poly):
        self.L = L
        if not isinstance(poly, fmpq_poly):
            poly = fmpq_poly([_q(c) if isinstance(c, Fraction) else c for c in poly])
        self.poly = poly % fmpq_poly(cyclotomic_poly(L).coeffs())

    @classmethod
    def rational(cls, L: int, x) -> "CyclotomicElement":
        return cls(L, fmpq_poly([_q(x)]))

    @classmethod
    def zeta_power(cls, L: int, e: int) -> "CyclotomicElement":
        e %= L
        return cls(L, fmpq_poly([0] * e + [1]))

    def __add__(self, other):
        return CyclotomicElement(self.L, self.poly + other.poly)

    def __sub__(self, other):
        return CyclotomicElement(self.L, self.poly - other.poly)

    def __mul__(self, other):
        if isinstance(other, CyclotomicElement):
            return CyclotomicElement(self.L, self.poly * other.poly)
        return CyclotomicElement(self.L, self.poly * _q(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return self.L == other.L and self.poly == other.poly
        return self.poly == fmpq_poly([_q(other)])

    def __hash__(self):
        return hash((self.L, str(self.poly)))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def rational_value(self) -> Fraction | None:
        """The element as a rational number, or None if it is not rational."""
        if self.poly.degree() > 0:
            return None
        c = self.poly[0] if self.poly.degree() == 0 else fmpq(0)
        return Fraction(int(c.p), int(c.q))

    def coefficients(self) -> list[Fraction]:
        return [Fraction(int(c.p), int(c.q)) for c in self.poly.coeffs()]

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.L)
        return sum(complex(float(c)) * z**i for i, c in enumerate(self.coefficients()))

    def __repr__(self):
        return f"CyclotomicElement(L={self.L}, {self.poly})"


def evaluate_at_root(coeffs, omega: RootOfUnity) -> CyclotomicElement:
    """``sum_i coeffs[i] omega^i`` computed exactly in ``Q(zeta_p)``."""
    L = omega.p
    e = omega.exponent_in(L)
    poly = [fmpq(0)] * L
    for i, c in enumerate(coeffs):
        poly[(i * e) % L] += _q(c)
    return CyclotomicElement(L, fmpq_poly(poly))


def unity_root_orders(coeffs, bound: int) -> list[int]:
    """Orders ``p <= bound`` such that every primitive ``p``-th root of unity is a root of ``sum coeffs[i] z^i``."""
    cs = [Fraction(c) for c in coeffs]
    den = 1
    for c in cs:
        den = lcm(den, c.denominator)
    poly = fmpz_poly([int(c * den) for c in cs])
    if poly.is_zero():
        raise ValueError("zero polynomial has every root")
    orders = []
    for p in range(1, bound + 1):
        phi = cyclotomic_poly(p)
        if phi.degree() > poly.degree():
            continue
        if (poly % phi).is_zero():
            # confirm through the gcd with z^p - 1, as required for the exact filter
            zp = fmpz_poly([-1] + [0] * (p - 1) + [1])
            if (poly.gcd(zp) % phi).is_zero():
                orders.append(p)
    return orders
