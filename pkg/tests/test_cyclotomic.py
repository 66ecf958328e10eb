import cmath
from fractions import Fraction

import pytest

from coslab.cyclotomic import CyclotomicElement, RootOfUnity, evaluate_at_root, unity_root_orders


def test_root_of_unity_normalizes_and_validates():
    w = RootOfUnity(7, 5)
    assert w.k == 2
    assert w.exponent_in(10) == 4
    with pytest.raises(ValueError):
        RootOfUnity(2, 4)
    with pytest.raises(ValueError):
        w.exponent_in(6)


def test_zeta_powers_sum_to_zero():
    L = 12
    total = CyclotomicElement.rational(L, 0)
    for e in range(L):
        total = total + CyclotomicElement.zeta_power(L, e)
    assert total.is_zero()


def test_field_arithmetic_matches_complex():
    L = 7
    a = CyclotomicElement(L, [Fraction(1, 2), 3, 0, -1])
    b = CyclotomicElement.zeta_power(L, 5) * 2 - CyclotomicElement.rational(L, 1)
    assert abs(complex(a + b) - (complex(a) + complex(b))) < 1e-12
    assert abs(complex(a - b) - (complex(a) - complex(b))) < 1e-12
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-12
    assert (a * b).rational_value() is None
    assert CyclotomicElement.rational(L, Fraction(3, 4)).rational_value() == Fraction(3, 4)


def test_evaluate_at_root_exact_zero():
    # 1 + z + z^2 vanishes at primitive cube roots
    assert evaluate_at_root([1, 1, 1], RootOfUnity(1, 3)).is_zero()
    v = evaluate_at_root([1, 1, 1], RootOfUnity(1, 4))
    assert abs(complex(v) - (1 + 1j - 1)) < 1e-12


def test_unity_root_orders():
    # z^6 - 1 = Phi_1 Phi_2 Phi_3 Phi_6
    assert unity_root_orders([-1, 0, 0, 0, 0, 0, 1], 20) == [1, 2, 3, 6]
    # (z - 2)(z^2 + 1): only the primitive fourth roots
    assert unity_root_orders([-2, 1, -2, 1], 20) == [4]
    assert unity_root_orders([Fraction(1, 2), 1], 10) == []
    with pytest.raises(ValueError):
        unity_root_orders([0, 0], 5)


def test_complex_value_of_root():
    assert abs(complex(RootOfUnity(1, 6)) - cmath.exp(1j * cmath.pi / 3)) < 1e-15
