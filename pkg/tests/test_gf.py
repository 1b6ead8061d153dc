import pytest
from hypothesis import given, settings, strategies as st

from selfdual_bch.errors import DegreeZero, NonPrimeCharacteristic, OrderOverflow
from selfdual_bch.gf import (
    field_create,
    field_of_order,
    frobenius,
    primitive_element,
    subfield_embedding,
)

ORDERS = [2, 3, 4, 5, 8, 9, 13, 16, 25, 27, 49]


def test_gf8_defining_polynomial():
    f = field_create(2, 3)
    assert f.defining_poly == (1, 1, 0, 1)  # x^3 + x + 1
    assert f.order == 8


def test_prime_field_generator():
    f = field_create(3)
    assert f.generator_value == 2
    assert f.element_order(2) == 2


@pytest.mark.parametrize("q", ORDERS)
def test_generator_is_primitive(q):
    f = field_of_order(q)
    g = f.generator_value
    assert f.element_order(g) == q - 1
    assert sorted(f.pow(g, k) for k in range(q - 1)) == list(range(1, q))


def test_errors():
    with pytest.raises(NonPrimeCharacteristic):
        field_create(6, 1)
    with pytest.raises(DegreeZero):
        field_create(2, 0)
    with pytest.raises(OrderOverflow):
        field_create(2, 40)


def _elements(q):
    return st.integers(min_value=0, max_value=q - 1)


@pytest.mark.parametrize("q", [4, 9, 16, 25, 27])
def test_field_axioms(q):
    f = field_of_order(q)

    @settings(max_examples=60, deadline=None)
    @given(_elements(q), _elements(q), _elements(q))
    def check(a, b, c):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1

    check()


@pytest.mark.parametrize("q", [4, 9, 25])
def test_frobenius_is_additive_and_multiplicative(q):
    f = field_of_order(q)
    p = f.p
    for a in range(q):
        for b in range(q):
            assert f.frob(f.add(a, b), p) == f.add(f.frob(a, p), f.frob(b, p))
            assert f.frob(f.mul(a, b), p) == f.mul(f.frob(a, p), f.frob(b, p))


def test_frobenius_fixes_prime_subfield():
    f = field_of_order(9)
    fixed = [a for a in range(9) if f.frob(a, 3) == a]
    assert len(fixed) == 3
    x = primitive_element(f)
    assert frobenius(frobenius(x, 3), 3) == x


@pytest.mark.parametrize("small,big", [(2, 4), (2, 16), (4, 16), (3, 9), (3, 27), (5, 25)])
def test_subfield_embedding_is_a_homomorphism(small, big):
    fs, fb = field_of_order(small), field_of_order(big)
    emb = subfield_embedding(fs, fb)
    assert len(set(emb)) == small
    for a in range(small):
        assert fb.frob(emb[a], small) == emb[a]
        for b in range(small):
            assert emb[fs.add(a, b)] == fb.add(emb[a], emb[b])
            assert emb[fs.mul(a, b)] == fb.mul(emb[a], emb[b])


def test_sqrt_minus_one():
    assert field_of_order(5).sqrt_minus_one() == 2
    assert field_of_order(13).sqrt_minus_one() == 5
    assert field_of_order(3).sqrt_minus_one() is None
    f9 = field_of_order(9)
    mu = f9.sqrt_minus_one()
    assert f9.mul(mu, mu) == f9.neg(1)


def test_field_element_operators():
    f = field_of_order(7)
    a, b = f(3), f(5)
    assert int(a + b) == 1
    assert int(a * b) == 1
    assert int(a / b) == 2
    assert int(-a) == 4
    assert int(a**6) == 1
