import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from coslab.errors import (
    DecompositionFailed,
    InvalidP,
    NoStructureFound,
    NoUnityRoots,
    RangeTooShort,
)
from coslab.harness import random_structured
from coslab.poly import CosinePoly
from coslab.structure import (
    analyze_structure,
    carrier,
    coalesce,
    companion,
    companion_from_cosines,
    decompose_periodic,
    find_periodic_partition,
    g_zform,
    order_bound,
    reconstruct,
    sparse_product,
    structure_pipeline,
    window_space,
)
from coslab.zeros import sign_change_points


def test_find_periodic_partition_greedy():
    a = [1, 0, 1, 0, 1, 1, 1, 1, 2]
    part = find_periodic_partition(a, 2)
    assert part.intervals == ((0, 4), (5, 7), (8, 8))
    part.check(a)
    with pytest.raises(InvalidP):
        find_periodic_partition(a, 0)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=40), st.integers(1, 5))
def test_greedy_partition_is_valid_and_minimal_against_brute_force(a, P):
    part = find_periodic_partition(a, P)
    part.check(a)
    # dynamic programming over cut points gives the true minimum
    n = len(a)
    best = [0] + [n + 1] * n
    for end in range(1, n + 1):
        for start in range(end):
            if all(a[i] == a[i - P] for i in range(start + P, end)):
                best[end] = min(best[end], best[start] + 1)
    assert part.K == best[n]


def test_coalesce_merges_compatible_neighbours():
    a = [1, 2, 1, 2, 1, 2]
    from coslab.smoothing import PeriodicPartition

    fine = PeriodicPartition.build(a, [(0, 1), (2, 3), (4, 5)], 2)
    assert coalesce(a, fine).intervals == ((0, 5),)


def test_window_space_of_periodic_sequence():
    a = [1, 0, 2] * 8
    ws = window_space(a, 4, 0, 23)
    assert ws.dim == 3
    assert ws.annihilator == (1, 0, 0, -1)  # a(r) - a(r+3) = 0
    assert ws.annihilates(ws.annihilator)


def test_window_space_full_rank_and_short_range():
    a = [1, 2, 4, 8, 16, 31, 64, 128, 256, 512]
    assert window_space(a, 3, 0, 9).annihilator is None
    with pytest.raises(RangeTooShort):
        window_space(a, 5, 0, 4)


def test_order_bound_grows():
    assert order_bound(2) == 8
    assert order_bound(100) >= 400


def test_decompose_period_three():
    a = [2, -1, 5] * 10
    comps = decompose_periodic(a, (-1, 0, 0, 1), 0, 29)
    assert {c.p for c in comps} <= {1, 3}
    for r in range(3, 27):
        assert reconstruct(comps, r).rational_value() == a[r]


def test_decompose_errors():
    with pytest.raises(NoUnityRoots):
        decompose_periodic([2**k for k in range(12)], (-2, 1), 0, 11)
    with pytest.raises(DecompositionFailed):
        decompose_periodic([1, 0, 0, 1, 0, 0, 1, 5], (-1, 0, 0, 1), 0, 7)


def test_companion_from_cosines_exact():
    comp = companion_from_cosines([0])
    assert comp.poly == (1, 0, 1)
    assert comp.cosine == (0, 2)  # 2 cos t
    assert comp.exact


def test_window_space_zero_period_sum_is_more_deficient():
    # 1, 0, -1 repeated also satisfies a(r) + a(r+1) + a(r+2) = 0
    assert window_space([1, 0, -1] * 8, 4, 0, 23).dim == 2


def test_companion_vanishes_near_sign_changes():
    g = CosinePoly((Fraction(1, 2),) + (1,) * 6)
    comp = companion(g, d_prime=1)
    assert comp.d == len(sign_change_points(g)) == 6
    lhs, rhs, err = comp.condition
    assert lhs - err >= rhs
    with mp.workprec(256):
        eps = mpf(comp.epsilon.numerator) / comp.epsilon.denominator
        for lo, hi in comp.roots_t:
            t = (mpf(lo.numerator) / lo.denominator + mpf(hi.numerator) / hi.denominator) / 2
            assert abs(comp.cos_value(t + eps)) < mpf(2) ** -100
            # the cosine form changes sign across each perturbed point
            s1 = comp.cos_value(t + eps - mpf(2) ** -60)
            s2 = comp.cos_value(t + eps + mpf(2) ** -60)
            assert s1 * s2 < 0


def test_sparse_product_matches_schoolbook():
    g = CosinePoly((1,) * 32)
    Q = companion_from_cosines([0]).poly
    sp = sparse_product(g, Q, 1)
    G = np.array([int(c) for c in g_zform(g).coeffs()], dtype=object)
    C = np.array([int(c) for c in carrier(1).coeffs()], dtype=object)
    F = np.convolve(np.convolve(G, C), np.array([int(c) for c in Q], dtype=object))
    assert sp.exact
    assert sp.q == sum(1 for c in F if c != 0)


def test_sparse_product_periodic_interior_vanishes():
    g = CosinePoly((1, 0, 1) * 40)
    sp = sparse_product(g, [1], 3)
    assert sp.q <= 40
    # G is palindromic: one long zero run on each side of the centre
    assert sorted(hi - lo for lo, hi in sp.zero_runs)[-2] > 100


def test_sparse_product_reversal_symmetry():
    # reversing G (palindromic) and Q gives the reversed F: same count
    g = CosinePoly((2, -1, 0, 3, 1, 1, 1, 1))
    Q = [Fraction(1), Fraction(-3, 2), Fraction(1)]
    a = sparse_product(g, Q, 2)
    b = sparse_product(g, Q[::-1], 2)
    assert a.q == b.q


def test_pipeline_dirichlet():
    g = CosinePoly((1,) * 101)
    part = structure_pipeline(g, 4)
    part.check(g.coeffs)
    assert part.P == 1 and part.K <= 3


def test_pipeline_recovers_period_six():
    rng = random.Random(0)
    for _ in range(3):
        sp = random_structured(rng, K_max=2, P_max=6, N_min=250, N_max=300)
        res = analyze_structure(sp.g, 8)
        res.partition.check(sp.g.coeffs)
        assert any((k * sp.partition.P) % res.partition.P == 0 for k in range(1, 5))
        assert res.partition.K <= sp.partition.K + 6 * sp.partition.P


def test_pipeline_random_input_has_no_structure():
    rng = random.Random(1)
    g = CosinePoly(tuple(rng.randint(-3, 3) for _ in range(150)))
    with pytest.raises(NoStructureFound):
        structure_pipeline(g, 3)
