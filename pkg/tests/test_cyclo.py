from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from almonomial.cyclo import Cyclotomic, cyclotomic_polynomial, euler_phi


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # degree is the totient
    for e in range(1, 40):
        assert len(cyclotomic_polynomial(e)) - 1 == euler_phi(e)


def test_roots_of_unity_basics():
    z = Cyclotomic.root_of_unity(5, 1)
    acc = Cyclotomic.one(5)
    for _ in range(5):
        acc = acc * z
    assert acc == Cyclotomic.one(5)
    # sum of all fifth roots vanishes
    total = Cyclotomic.zero(5)
    for k in range(5):
        total = total + Cyclotomic.root_of_unity(5, k)
    assert total.is_zero()


def test_minus_one_and_i():
    assert Cyclotomic.root_of_unity(2, 1) == -1
    i = Cyclotomic.root_of_unity(4, 1)
    assert i * i == -1
    assert i.conjugate() == Cyclotomic.root_of_unity(4, 3)
    assert (i * i.conjugate()) == 1


def test_lift_and_mixed_conductors():
    z3 = Cyclotomic.root_of_unity(3, 1)
    z6 = Cyclotomic.root_of_unity(6, 2)
    assert z3.lift(6) == z6
    assert z3 + z6 == z6 * 2
    with pytest.raises(ValueError):
        Cyclotomic.root_of_unity(4, 1) + Cyclotomic.root_of_unity(3, 1)


def test_rational_detection():
    z = Cyclotomic.root_of_unity(8, 1)
    v = z * z.conjugate() * Fraction(3, 2)
    assert v.is_rational()
    assert v.as_fraction() == Fraction(3, 2)
    with pytest.raises(ValueError):
        z.as_fraction()
    with pytest.raises(ValueError):
        (Cyclotomic.one(4) / 2).as_integer()


def test_render():
    z = Cyclotomic.root_of_unity(6, 1)
    assert (z * 2 - 1).render() == "2*z6 - 1"
    assert Cyclotomic.zero(6).render() == "0"
    assert (-Cyclotomic.one(6)).render() == "-1"


small = st.integers(min_value=-4, max_value=4)


@st.composite
def cyclotomics(draw, conductor):
    d = euler_phi(conductor)
    coeffs = draw(st.lists(small, min_size=d, max_size=d))
    return Cyclotomic(conductor, [Fraction(c) for c in coeffs], _reduced=True)


@given(st.integers(min_value=1, max_value=12).flatmap(
    lambda e: st.tuples(cyclotomics(e), cyclotomics(e), cyclotomics(e))
))
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()
    assert (a * b) * c == a * (b * c)


@given(st.integers(min_value=1, max_value=12).flatmap(
    lambda e: st.tuples(cyclotomics(e), cyclotomics(e))
))
def test_conjugation_is_a_ring_map(pair):
    a, b = pair
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a.conjugate().conjugate() == a


@given(st.integers(min_value=1, max_value=24), st.integers(min_value=-30, max_value=30))
def test_root_powers_reduce_mod_conductor(e, k):
    assert Cyclotomic.root_of_unity(e, k) == Cyclotomic.root_of_unity(e, k % e)
    # norm of a root of unity is 1
    z = Cyclotomic.root_of_unity(e, k)
    assert z * z.conjugate() == 1
