import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rqff.errors import EvenCharacteristic, NonPrime, ReducibleModulus
from rqff.ffield import field_of_order, make_field

FIELDS = [(3, 1), (5, 1), (13, 1), (3, 2), (5, 2), (3, 3)]


def test_make_field_prime():
    F = make_field(5)
    assert F.q == 5 and F.is_prime


def test_make_field_extension_with_modulus():
    F = make_field(3, 2, [1, 0, 1])
    assert F.q == 9 and F.modulus == (1, 0, 1)


def test_default_moduli():
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(5, 2).modulus == (2, 0, 1)


def test_rejects_even_and_composite():
    with pytest.raises(EvenCharacteristic):
        make_field(2)
    with pytest.raises(NonPrime):
        make_field(9)
    with pytest.raises(ReducibleModulus):
        make_field(5, 2, [4, 0, 1])  # T^2 - 1


def test_small_arithmetic():
    F = make_field(5)
    assert F.inv(2) == 3
    assert F.pow(2, 4) == 1
    F9 = make_field(3, 2)
    x = F9.gen()
    assert F9.mul(x, x) == 2


def test_squares_and_roots():
    F = make_field(5)
    assert F.is_square(4) and not F.is_square(2)
    assert F.sqrt(4) == 2 and F.sqrt(0) == 0
    assert make_field(13).sqrt(10) == 6
    assert make_field(3, 2).is_square(2)


def test_sqrt_tie_break_picks_smaller_coords():
    for p, e in FIELDS:
        F = make_field(p, e)
        for a in range(1, F.q):
            if F.is_square(a):
                r = F.sqrt(a)
                assert F.mul(r, r) == a
                assert F.coords(r) <= F.coords(F.neg(r))


def test_field_of_order():
    assert field_of_order(25).modulus == (2, 0, 1)
    with pytest.raises(NonPrime):
        field_of_order(15)


def test_element_wrapper():
    F = make_field(3, 2)
    x = F.element(F.gen())
    assert x * x == F(2)
    assert (x + 1) * (x - 1) == F(-2)
    assert x.inverse() * x == F(1)


def test_tables_agree_with_direct_arithmetic():
    F = make_field(5, 2)
    for a in range(F.q):
        for b in range(0, F.q, 3):
            assert F.mul(a, b) == F._mul_direct(a, b)
            assert F.add(a, b) == F._add_direct(a, b)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_field_axioms(pe, i, j, k):
    F = make_field(*pe)
    a, b, c = i % F.q, j % F.q, k % F.q
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q - 1) == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.integers(1, 10**6), st.integers(1, 10**6))
def test_chi_multiplicative(pe, i, j):
    F = make_field(*pe)
    a, b = 1 + i % (F.q - 1), 1 + j % (F.q - 1)
    assert F.chi(F.mul(a, b)) == F.chi(a) * F.chi(b)
