"""The smoothed polynomial ``g~ = g * k_P^2`` and its block form.

In the rescaled variable ``g(t) = sum a_n cos(2 pi n t)`` and
``k_P(t) = (2/P) sum_{n<P} cos(2 pi n t)``.  Since ``k_P^2 >= 0`` has only
even-order zeros, ``g~`` has exactly the sign changes of ``g``; its cosine
coefficients lie in ``P^-2 Z``.

Convention: block constants ``c_j`` are *cosine* coefficients of ``g~``
(so ``sum_j c_j |J_j| = g~(0)``).  On the interior ``J`` of a ``P``-periodic
run whose ``P`` consecutive terms sum to ``S`` the Fourier coefficient is
``2S/P`` and therefore the cosine coefficient is ``4S/P``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentPartition, InvalidP
from .poly import CosinePoly, LaurentPoly, as_scalar, multiply, to_cosine, to_laurent, value_at_zero


@dataclass(frozen=True)
class PeriodicPartition:
    """Intervals ``I_j = [lo, hi]`` covering ``[0, N]`` on each of which ``a_n = a_{n+P}``."""

    intervals: tuple  # ((lo, hi), ...)
    P: int
    patterns: tuple = ()  # first min(P, |I_j|) coefficients of each interval

    @property
    def K(self) -> int:
        return len(self.intervals)

    @property
    def N(self) -> int:
        return self.intervals[-1][1] if self.intervals else -1

    @classmethod
    def build(cls, coeffs, intervals, P: int) -> "PeriodicPartition":
        coeffs = [as_scalar(c) for c in coeffs]
        pats = tuple(tuple(coeffs[lo:min(hi + 1, lo + P)]) for lo, hi in intervals)
        return cls(tuple((int(a), int(b)) for a, b in intervals), int(P), pats)

    def check(self, coeffs) -> None:
        """Raise :class:`InconsistentPartition` unless this partitions ``[0, len-1]`` periodically."""
        coeffs = [as_scalar(c) for c in coeffs]
        expect = 0
        for lo, hi in self.intervals:
            if lo != expect or hi < lo:
                raise InconsistentPartition(f"interval [{lo}, {hi}] breaks the cover at {expect}")
            for n in range(lo + self.P, hi + 1):
                if coeffs[n] != coeffs[n - self.P]:
                    raise InconsistentPartition(
                        f"a_{n} != a_{n - self.P} inside [{lo}, {hi}] (P={self.P})")
            expect = hi + 1
        if expect != len(coeffs):
            raise InconsistentPartition(f"partition ends at {expect - 1}, sequence at {len(coeffs) - 1}")

    def is_valid_for(self, coeffs) -> bool:
        try:
            self.check(coeffs)
        except InconsistentPartition:
            return False
        return True

    def period_sums(self) -> list:
        """``S_j``: the sum of any ``P`` consecutive terms of interval ``j`` (None if shorter than ``P``)."""
        return [sum(p, Fraction(0)) if len(p) == self.P else None for p in self.patterns]

    def to_json(self) -> dict:
        return {
            "P": self.P,
            "intervals": [[lo, hi] for lo, hi in self.intervals],
            "patterns": [[[c.numerator, c.denominator] for c in pat] for pat in self.patterns],
        }

    @classmethod
    def from_json(cls, obj) -> "PeriodicPartition":
        if isinstance(obj, str):
            obj = json.loads(obj)
        pats = tuple(tuple(as_scalar(c) for c in pat) for pat in obj.get("patterns", []))
        return cls(tuple((int(a), int(b)) for a, b in obj["intervals"]), int(obj["P"]), pats)


@dataclass(frozen=True)
class BlockForm:
    """``g~ = sum_j c_j sum_{n in J_j} cos(2 pi n t)`` with ``J_j = [lo_j, hi_j]``."""

    blocks: tuple  # ((lo, hi, c), ...)
    P: int
    M_bound: Fraction

    @property
    def K_tilde(self) -> int:
        return len(self.blocks)

    def endpoints(self) -> list[int]:
        """Upper endpoints ``n_j`` of the blocks, read as ``J_j = (n_{j-1}, n_j]``; block {0} is skipped."""
        return [hi for lo, hi, _ in self.blocks if hi >= 1]

    def value_at_zero(self) -> Fraction:
        return sum((c * (hi - lo + 1) for lo, hi, c in self.blocks), Fraction(0))

    def nonzero_length(self) -> int:
        return sum(hi - lo + 1 for lo, hi, c in self.blocks if c != 0)

    def expand(self) -> CosinePoly:
        top = self.blocks[-1][1] if self.blocks else 0
        cs = [Fraction(0)] * (top + 1)
        for lo, hi, c in self.blocks:
            for n in range(lo, hi + 1):
                cs[n] = c
        return CosinePoly(tuple(cs))

    def to_json(self) -> dict:
        return {
            "P": self.P,
            "M_bound": [self.M_bound.numerator, self.M_bound.denominator],
            "blocks": [{"lo": lo, "hi": hi, "c": [c.numerator, c.denominator]} for lo, hi, c in self.blocks],
        }


def fejer_square_kernel(P: int) -> LaurentPoly:
    """Laurent coefficients of ``((2/P) sum_{n<P} cos(2 pi n t))^2``.

    Closed form: ``P^-2 (1 + 2 sum_{|m|<P} e(mt) + sum_{|m|<=2P-2} (2P-1-|m|) e(mt))``.
    The result is checked against a direct self-convolution before returning.
    """
    if not isinstance(P, int) or P < 1:
        raise InvalidP(f"P must be a positive integer, got {P!r}")
    P2 = P * P
    out = {}
    for m in range(-(2 * P - 2), 2 * P - 1):
        w = (2 * P - 1 - abs(m)) + (2 if abs(m) < P else 0) + (1 if m == 0 else 0)
        out[m] = Fraction(w, P2)
    kernel = LaurentPoly(out)
    base = to_laurent(CosinePoly(tuple(Fraction(2, P) for _ in range(P))))
    if multiply(base, base) != kernel:
        raise AssertionError(f"kernel closed form disagrees with self-convolution for P={P}")
    return kernel


def build_tilde(g: CosinePoly, P: int) -> CosinePoly:
    """``g~(t) = g(t) k_P(t)^2`` as an exact cosine polynomial."""
    kernel = fejer_square_kernel(P)
    return to_cosine(multiply(to_laurent(g), kernel))


def tilde_fourier(gt: CosinePoly, n: int) -> Fraction:
    """Fourier coefficient ``g~^(n)`` (half the cosine coefficient for ``n != 0``)."""
    return gt[0] if n == 0 else gt[abs(n)] / 2


def block_form(gt: CosinePoly, partition: PeriodicPartition, M: int | Fraction | None = None) -> BlockForm:
    """Group the coefficients of ``g~`` into blocks of constant value.

    Each interval ``I_j = [u, v]`` of ``partition`` contributes one long block
    ``[u + 2P, v - 2P]`` (when nonempty) whose coefficients must all equal
    ``4 S_j / P``; every other frequency in ``[0, deg g + 2P - 2]`` becomes a
    unit block carrying its exact coefficient.
    """
    P = partition.P
    N = partition.N
    top = max(N + 2 * P - 2, gt.degree)
    sums = partition.period_sums()
    longs = []
    for (u, v), S in zip(partition.intervals, sums):
        lo, hi = u + 2 * P, v - 2 * P
        if lo > hi:
            continue
        c = 4 * S / P
        for n in range(lo, hi + 1):
            if gt[n] != c:
                raise InconsistentPartition(
                    f"coefficient {gt[n]} at n={n} differs from 4*S/P={c} inside [{lo}, {hi}]")
        longs.append((lo, hi, c))
    blocks = []
    n = 0
    for lo, hi, c in longs:
        while n < lo:
            blocks.append((n, n, gt[n]))
            n += 1
        blocks.append((lo, hi, c))
        n = hi + 1
    while n <= top:
        blocks.append((n, n, gt[n]))
        n += 1
    if M is None:
        M = max((abs(c) for c in _original_coeff_bound(partition)), default=Fraction(0))
    return BlockForm(tuple(blocks), P, 4 * Fraction(M))


def _original_coeff_bound(partition: PeriodicPartition):
    for pat in partition.patterns:
        yield from pat


def interior_positions(partition: PeriodicPartition):
    """Yield ``(n, S_j)`` for every ``n`` in a shrunken interval ``[u+2P, v-2P]``."""
    P = partition.P
    for (u, v), S in zip(partition.intervals, partition.period_sums()):
        for n in range(u + 2 * P, v - 2 * P + 1):
            yield n, S


def check_tilde_properties(g: CosinePoly, P: int, gt: CosinePoly | None = None, M: int | None = None) -> dict:
    """Exact checks on ``g~``: value at 0, ``P^-2 Z`` lattice, coefficient bound ``4M``, degree."""
    if gt is None:
        gt = build_tilde(g, P)
    if M is None:
        M = max(abs(c) for c in g.coeffs)
    P2 = P * P
    lattice = all((c * P2).denominator == 1 for c in gt.coeffs)
    bound = max(abs(c) for c in gt.coeffs)
    return {
        "value_at_zero": value_at_zero(gt) == 4 * value_at_zero(g),
        "lattice": lattice,
        "max_abs_coeff": bound,
        "within_4M": bound <= 4 * M,
        "degree_ok": gt.degree <= g.degree + 2 * P - 2,
    }
