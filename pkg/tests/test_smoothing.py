import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coslab.errors import InconsistentPartition, InvalidP
from coslab.harness import random_structured
from coslab.poly import CosinePoly, value_at_zero
from coslab.smoothing import (
    PeriodicPartition,
    block_form,
    build_tilde,
    check_tilde_properties,
    fejer_square_kernel,
    interior_positions,
    tilde_fourier,
)


@pytest.mark.parametrize("P", [1, 2, 3, 6, 11])
def test_kernel_matches_sampled_square(P):
    k = fejer_square_kernel(P)
    ts = np.linspace(0, 2 * np.pi, 257)
    direct = (2 / P * sum(np.cos(n * ts) for n in range(P))) ** 2
    series = sum(float(c) * np.cos(m * ts) for m, c in k.coeffs.items())
    assert np.max(np.abs(direct - series)) < 1e-12


@pytest.mark.parametrize("P", [1, 2, 3, 7])
def test_kernel_central_coefficient(P):
    k = fejer_square_kernel(P)
    assert k[0] == Fraction(2 * P + 2, P * P)
    assert sum(k.coeffs.values()) == 4  # k_P(0)^2
    assert k.max_freq == 2 * P - 2


def test_kernel_rejects_bad_period():
    with pytest.raises(InvalidP):
        fejer_square_kernel(0)


def test_partition_check():
    coeffs = [1, 0, 1, 0, 1, 1, 1]
    part = PeriodicPartition.build(coeffs, [(0, 4), (5, 6)], 2)
    part.check(coeffs)
    assert part.period_sums() == [1, 2]
    with pytest.raises(InconsistentPartition):
        PeriodicPartition.build(coeffs, [(0, 5), (6, 6)], 2).check(coeffs)
    with pytest.raises(InconsistentPartition):
        PeriodicPartition.build(coeffs, [(0, 4)], 2).check(coeffs)


def test_partition_json_round_trip():
    coeffs = [2, -1, 2, -1, 0]
    part = PeriodicPartition.build(coeffs, [(0, 3), (4, 4)], 2)
    assert PeriodicPartition.from_json(part.to_json()) == part


def test_tilde_of_constant_run():
    # g = sum_{n<=40} cos nt, P = 1: interior cosine coefficients are 4 S / P = 4
    g = CosinePoly((1,) * 41)
    gt = build_tilde(g, 1)
    assert gt == g.scale(4)
    gt3 = build_tilde(g, 3)
    assert all(gt3[n] == 4 for n in range(6, 35))
    assert all(tilde_fourier(gt3, n) == 2 for n in range(6, 35))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_tilde_exact_properties(seed):
    sp = random_structured(random.Random(seed), K_max=4, P_max=5, N_max=120)
    g, part = sp.g, sp.partition
    gt = build_tilde(g, part.P)
    assert value_at_zero(gt) == 4 * value_at_zero(g)
    assert all((c * part.P**2).denominator == 1 for c in gt.coeffs)
    assert gt.degree <= g.degree + 2 * part.P - 2
    for n, S in interior_positions(part):
        assert tilde_fourier(gt, n) == 2 * S / part.P


def test_fourier_coefficients_within_4M():
    # the Fourier (half-cosine) coefficients respect 4M even where cosine coefficients do not
    rng = random.Random(3)
    for _ in range(30):
        sp = random_structured(rng, N_max=150)
        gt = build_tilde(sp.g, sp.partition.P)
        M = max(abs(c) for c in sp.g.coeffs)
        assert max(abs(tilde_fourier(gt, n)) for n in range(gt.degree + 1)) <= 4 * M


def test_cosine_coefficient_can_exceed_4M():
    # g = 1 + cos t + cos 2t + cos 3t with P = 2: the constant term of g~ is 11/4
    # but the cosine coefficient at n = 1 is 5 > 4M = 4
    g = CosinePoly.from_set([0, 1, 2, 3])
    gt = build_tilde(g, 2)
    assert gt[0] == Fraction(11, 4)
    assert gt[1] == 5
    props = check_tilde_properties(g, 2, gt)
    assert props["lattice"] and props["value_at_zero"] and not props["within_4M"]


def test_block_form_totals():
    sp = random_structured(random.Random(5), K_max=3, P_max=4, N_max=200)
    g, part = sp.g, sp.partition
    gt = build_tilde(g, part.P)
    bf = block_form(gt, part, sp.M)
    assert sum(c * (hi - lo + 1) for lo, hi, c in bf.blocks) == value_at_zero(gt)
    assert bf.blocks[0][0] == 0
    assert all(b[0] == a[1] + 1 for a, b in zip(bf.blocks, bf.blocks[1:]))


def test_block_form_detects_wrong_partition():
    g = CosinePoly((1,) * 30 + (0, 1) * 10)
    gt = build_tilde(g, 2)
    wrong = PeriodicPartition.build(g.coeffs, [(0, len(g.coeffs) - 1)], 2)
    with pytest.raises(InconsistentPartition):
        block_form(gt, wrong)
