import pytest
from hypothesis import given, settings, strategies as st

from selfdual_bch.errors import DivisionByZeroPolynomial, EmptyList
from selfdual_bch.gf import field_of_order
from selfdual_bch.poly import (
    Polynomial,
    cyclic_generator,
    minimal_polynomial,
    poly_divmod,
    poly_gcd,
    poly_lcm,
    root_of_unity_context,
)


def test_minimal_polynomials():
    assert minimal_polynomial(1, 7, 2).coeffs == (1, 1, 0, 1)
    assert minimal_polynomial(0, 40, 3).coeffs == (2, 1)
    assert minimal_polynomial(5, 40, 3).degree == 2


@pytest.mark.parametrize("n,q", [(7, 2), (40, 3), (13, 3), (91, 9), (15, 4)])
def test_minimal_polynomial_roots(n, q):
    base, big, beta, emb = root_of_unity_context(n, q)
    for i in range(n):
        mp = minimal_polynomial(i, n, q)
        lifted = Polynomial(big, tuple(emb[c] for c in mp.coeffs))
        assert lifted(big.pow(beta, i)) == 0
        assert mp.leading == 1


def test_lcm_divides_x_n_minus_one():
    f = field_of_order(3)
    ms = [minimal_polynomial(i, 40, 3) for i in range(1, 5)]
    g = poly_lcm(ms)
    assert g.degree == 12
    assert (Polynomial.x_n_minus_one(f, 40) % g).is_zero()
    assert g == cyclic_generator([1, 2, 3, 4, 6, 9, 12, 14, 18, 27, 28, 36], 40, 3)


def test_errors():
    f = field_of_order(5)
    with pytest.raises(DivisionByZeroPolynomial):
        poly_divmod(Polynomial(f, (1, 2)), Polynomial(f, ()))
    with pytest.raises(EmptyList):
        poly_lcm([])


coeffs = st.lists(st.integers(0, 4), min_size=0, max_size=7)


@settings(max_examples=100, deadline=None)
@given(coeffs, coeffs)
def test_division_identity(a, b):
    f = field_of_order(5)
    pa, pb = Polynomial.from_list(f, a), Polynomial.from_list(f, b)
    if pb.is_zero():
        return
    quo, rem = poly_divmod(pa, pb)
    assert quo * pb + rem == pa
    assert rem.is_zero() or rem.degree < pb.degree


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs)
def test_gcd_divides_both(a, b):
    f = field_of_order(5)
    pa, pb = Polynomial.from_list(f, a), Polynomial.from_list(f, b)
    g = poly_gcd(pa, pb)
    if g.is_zero():
        assert pa.is_zero() and pb.is_zero()
        return
    assert (pa % g).is_zero() and (pb % g).is_zero()
