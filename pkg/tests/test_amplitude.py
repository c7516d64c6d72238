from fractions import Fraction

import pytest

from fuscat.amplitude import (
    Tensor3,
    amplitude_T2,
    amplitude_T4,
    amplitude_T4_normalized,
    casimir_square_coefficient,
    quantum_T4,
    quantum_certificate,
    sl2_adjoint,
)
from fuscat.cyclotomic import CycNum, q_integer
from fuscat.errors import PreconditionError


def scaled(t, m_factor=1, gram_factor=1):
    return Tensor3(
        m=tuple(tuple(tuple(m_factor * v for v in r) for r in row) for row in t.m),
        gram=tuple(tuple(gram_factor * v for v in row) for row in t.gram),
    )


def test_sl2_tensor_is_valid():
    t = sl2_adjoint()
    t.validate()
    # Gram matrix is the adjoint trace form in the (e, h, f) basis
    assert t.gram[1][1] == 8 and t.gram[0][2] == 4 and t.gram[0][0] == 0


def test_t2_nonzero_and_scales_quadratically():
    t = sl2_adjoint()
    a2 = amplitude_T2(t)
    assert a2 != 0
    assert amplitude_T2(scaled(t, m_factor=2)) == 4 * a2
    assert amplitude_T2(scaled(t, m_factor=-1)) == a2


def test_zero_product_cannot_normalize():
    t = sl2_adjoint()
    zero = scaled(t, m_factor=0)
    assert amplitude_T2(zero) == 0
    with pytest.raises(PreconditionError):
        amplitude_T4_normalized(zero)


def test_degenerate_pairing_rejected():
    t = sl2_adjoint()
    bad = Tensor3(m=t.m, gram=tuple(tuple(Fraction(0) for _ in range(3)) for _ in range(3)))
    with pytest.raises(PreconditionError):
        amplitude_T2(bad)


def test_normalized_value_is_three_halves():
    assert amplitude_T4_normalized(sl2_adjoint()) == Fraction(3, 2)


def test_casimir_route_agrees():
    t = sl2_adjoint()
    assert casimir_square_coefficient(t) == Fraction(3, 2)
    assert casimir_square_coefficient(t) == amplitude_T4_normalized(t)


def test_normalized_value_is_scaling_invariant():
    t = sl2_adjoint()
    for mf, gf in [(2, 1), (1, 3), (-5, 7), (Fraction(2, 3), Fraction(9, 4))]:
        s = scaled(t, m_factor=mf, gram_factor=gf)
        assert amplitude_T4_normalized(s) == Fraction(3, 2)
        assert casimir_square_coefficient(s) == Fraction(3, 2)


def test_raw_t4_scaling():
    t = sl2_adjoint()
    assert amplitude_T4(scaled(t, m_factor=2)) == 16 * amplitude_T4(t)


def test_quantum_t4_l8():
    v = quantum_T4(8)
    assert v * v == Fraction(1, 2)
    assert v.den == 2
    cert = quantum_certificate(8, pmax=50)
    assert cert["square"] == Fraction(1, 2)
    assert cert["denominator_primes"] == [2]


def test_quantum_t4_closed_form():
    for l in (5, 8, 9, 12):
        q3 = q_integer(3, l)
        assert quantum_T4(l) * (q3 - 1) == q3 * (q3 - 2)


def test_quantum_denominator_vanishes_at_l4():
    with pytest.raises(PreconditionError):
        quantum_T4(4)


def test_classical_limit_of_closed_form():
    assert Fraction(3 * (3 - 2), 3 - 1) == Fraction(3, 2)


def test_quantum_t4_l9_regression():
    # no closed-form target here; value frozen from the exact evaluation
    v = quantum_T4(9)
    assert v == CycNum(18, [-1, 1, 1, 0, 0, -1])
    assert v.den == 1
    assert v.norm() == 9
