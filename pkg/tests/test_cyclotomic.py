from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gendw.cyclotomic import CyclotomicNumber, cyclotomic_polynomial, euler_phi, root_of_unity

MODULI = [4, 9, 25, 144]


def elements(n: int):
    coeff = st.fractions(min_value=-20, max_value=20, max_denominator=12)
    return st.lists(coeff, min_size=1, max_size=n).map(lambda cs: CyclotomicNumber(n, cs))


def triples():
    return st.sampled_from(MODULI).flatmap(lambda n: st.tuples(elements(n), elements(n), elements(n)))


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)
    for n in [1, 2, 6, 12, 25, 144]:
        assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_sum_of_roots_vanishes():
    total = sum((root_of_unity(25, k) for k in range(25)), CyclotomicNumber(25))
    assert total.is_zero()
    assert total == 0


def test_golden_ratio_conjugate():
    z = root_of_unity(5, 1) + root_of_unity(5, 4)
    assert z.is_rational() is False
    assert z == z.conjugate()
    assert z.to_complex() == pytest.approx(0.6180339887, abs=1e-10)
    assert z * z + z == 1  # (sqrt5-1)/2 solves x^2 + x = 1


def test_norm_of_one_plus_zeta5():
    z = 1 + root_of_unity(5, 1)
    n = z.conjugate() * z
    assert n == n.conjugate()
    assert n.to_complex().real == pytest.approx(2 + 2 * math.cos(2 * math.pi / 5), abs=1e-12)
    assert abs(n.to_complex().imag) < 1e-12


def test_lift_between_moduli():
    a = root_of_unity(4, 1)
    b = root_of_unity(6, 1)
    c = a * b
    assert c.modulus == 12
    assert c == root_of_unity(12, 5)
    assert root_of_unity(5, 2).lift(25) == root_of_unity(25, 10)


def test_rational_scaling_and_display():
    z = CyclotomicNumber.from_rational(Fraction(1, 3), 9)
    assert str(z) == "1/3"
    assert z.as_fraction() == Fraction(1, 3)
    assert z.approx() == "0.3333333333+0i"
    assert str(root_of_unity(4, 1)) == "z4"


def test_serialization_round_trip():
    z = root_of_unity(12, 5).scale(Fraction(-2, 7)) + 3
    assert CyclotomicNumber.from_dict(z.to_dict()) == z


def test_not_hashable():
    with pytest.raises(TypeError):
        hash(root_of_unity(5, 1))


def test_from_exponent_counts():
    counts = [1, 0, 2, 0, 0]
    z = CyclotomicNumber.from_exponent_counts(5, counts)
    assert z == 1 + 2 * root_of_unity(5, 2)


@settings(max_examples=60, deadline=None)
@given(triples())
def test_ring_axioms(xyz):
    a, b, c = xyz
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    assert a * 1 == a


@settings(max_examples=60, deadline=None)
@given(triples())
def test_conjugation_is_an_involutive_automorphism(xyz):
    a, b, _ = xyz
    assert a.conjugate().conjugate() == a
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@settings(max_examples=60, deadline=None)
@given(triples())
def test_complex_rendering_is_additive(xyz):
    a, b, _ = xyz
    assert cmath.isclose((a + b).to_complex(), a.to_complex() + b.to_complex(), abs_tol=1e-10)
    assert cmath.isclose((a * b).to_complex(), a.to_complex() * b.to_complex(),
                         rel_tol=1e-9, abs_tol=1e-8)
