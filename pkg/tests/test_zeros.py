import random
from fractions import Fraction

import pytest
from flint import fmpq
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from coslab.errors import IdenticallyZero
from coslab.poly import CosinePoly, evaluate
from coslab.zeros import (
    chebyshev_form,
    count_zeros,
    endpoint_signs,
    interior_zeros,
    sign_change_points,
    zero_counts,
)
from oracles import oracle_zero_count

# (Z, d) frozen from the sampling oracle in tests/oracles.py
KNOWN = [
    ((1, 1, 0, 0, 0, 1), (6, 3)),
    ((1, 1, 0, 1, 0, 1, 0, 1), (2, 1)),
    ((1, 1, 0, 1), (2, 1)),
    ((3, -4, 2), (2, 0)),  # (2 cos t - 1)^2
    ((1, 1), (1, 0)),
    ((0, 1), (2, 1)),
    ((1,) * 9, (16, 8)),
    ((0, 0, 0, 1), (6, 3)),
    ((2, -1, 0, 3, -2, 1), (6, 3)),
    ((Fraction(1, 2), Fraction(-3, 4), Fraction(1, 3)), (4, 2)),
]


@pytest.mark.parametrize("coeffs,expected", KNOWN)
def test_known_counts(coeffs, expected):
    p = CosinePoly(coeffs)
    rep = count_zeros(p)
    assert (rep.Z, rep.d) == expected
    assert zero_counts(p) == expected


def test_chebyshev_form_matches_values():
    p = CosinePoly((Fraction(1, 2), 0, Fraction(2, 3)))
    f, L = chebyshev_form(p)
    assert L == 6
    # f(cos t) = 6 p(t) at t = pi/3: cos t = 1/2
    assert f(fmpq(1, 2)) == fmpq(6) * fmpq(1, 6)


def test_zero_polynomial_raises():
    with pytest.raises(IdenticallyZero):
        count_zeros(CosinePoly((0,)))


def test_constant_has_no_zeros():
    rep = count_zeros(CosinePoly((3,)))
    assert rep.Z == 0 and rep.d == 0


def test_double_root_multiplicity():
    rep = count_zeros(CosinePoly((3, -4, 2)))
    assert rep.multiplicities == [2, 2]
    assert all(not z.sign_change for z in rep.zeros)


def test_zero_at_pi_is_not_a_sign_change():
    rep = count_zeros(CosinePoly((1, 1)))
    assert rep.Z == 1 and rep.d == 0
    z = rep.zeros[0]
    with mp.workdps(40):
        assert mpf(z.lo.numerator) / z.lo.denominator < mp.pi < mpf(z.hi.numerator) / z.hi.denominator
    assert rep.zeros[0].multiplicity == 2


def test_intervals_enclose_zeros_and_are_ordered():
    p = CosinePoly((2, -1, 0, 3, -2, 1))
    rep = count_zeros(p, precision=1e-15)
    los = [z.lo for z in rep.zeros]
    assert los == sorted(los)
    for z in rep.zeros:
        assert z.hi - z.lo <= Fraction(1, 10**15)
        a = evaluate(p, z.lo, 1e-30)
        b = evaluate(p, z.hi, 1e-30)
        assert a.sign() * b.sign() == -1


def test_sign_change_points_width():
    # Dirichlet kernel 1/2 + sum_{n<=8} cos nt vanishes at 2 pi k / 17
    p = CosinePoly((Fraction(1, 2),) + (1,) * 8)
    pts = sign_change_points(p, 1e-20)
    assert len(pts) == 8
    assert all(hi - lo <= Fraction(1, 10**20) for lo, hi in pts)
    with mp.workdps(40):
        for k, (lo, hi) in enumerate(pts, start=1):
            t = 2 * mp.pi * k / 17
            assert mpf(lo.numerator) / lo.denominator <= t <= mpf(hi.numerator) / hi.denominator


def test_interior_zeros_reports_even_roots():
    out = interior_zeros(CosinePoly((3, -4, 2)), 1e-12)
    assert len(out) == 1 and out[0][2] == 2


def test_endpoint_signs():
    assert endpoint_signs(CosinePoly((1, 1))) == (1, 1)
    assert endpoint_signs(CosinePoly((0, 1))) == (1, -1)


def test_json_output_is_decimal_strings():
    out = count_zeros(CosinePoly.from_set([0, 1, 5]), precision=1e-6).to_json(9)
    assert out["Z"] == 6 and out["d"] == 3
    lo, hi = out["zeros"][0]
    assert float(hi) - float(lo) < 1e-5


def test_random_agreement_with_oracle():
    rng = random.Random(11)
    for _ in range(60):
        cs = [rng.choice((-2, -1, 0, 1, 2)) for _ in range(rng.randint(1, 14))]
        if not any(cs):
            continue
        p = CosinePoly(tuple(cs))
        assert zero_counts(p) == oracle_zero_count(p.coeffs), cs


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=2, max_size=16).filter(any))
def test_count_invariants(cs):
    p = CosinePoly(tuple(cs))
    Z, d = zero_counts(p)
    s0, s1 = endpoint_signs(p)
    # interior zeros pair up; endpoints add one each
    assert (Z - d) % 1 == 0 and d <= Z
    assert Z - (p.coeffs and 0) <= 2 * p.degree
    # parity of sign changes is fixed by the signs near 0 and pi
    assert (d % 2 == 0) == (s0 == s1)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=2, max_size=12).filter(any), st.integers(1, 3))
def test_scaling_and_negation_preserve_counts(cs, k):
    p = CosinePoly(tuple(cs))
    q = CosinePoly(tuple(-k * c for c in cs))
    assert zero_counts(p) == zero_counts(q)
