import pytest

from selfdual_bch.cyclotomic import (
    all_cosets,
    circular_left_shift,
    coset,
    coset_leader,
    is_coset_leader,
    leader_at_least,
    leader_divisor_transfer,
    leader_table,
    multiplicative_order,
    q_adic_expand,
    q_adic_value,
    shift_values,
)
from selfdual_bch.errors import NonCoprimeModulus, NonDivisor, OutOfRange, ShiftOutOfRange


def test_coset_examples():
    assert coset(1, 3, 40).elements == (1, 3, 9, 27)
    assert coset(5, 3, 40).elements == (5, 15)
    assert coset(14, 3, 40).elements == (2, 6, 14, 18)
    assert coset(0, 3, 40).elements == (0,)


def test_coset_leaders():
    assert coset_leader(14, 3, 40) == 2
    assert coset_leader(38, 3, 80) == 22
    assert coset_leader(272, 9, 728) == 192


def test_partition():
    for q, n in [(3, 40), (2, 63), (9, 91), (5, 26)]:
        cs = all_cosets(q, n)
        flat = sorted(x for c in cs for x in c.elements)
        assert flat == list(range(n))
        table = leader_table(q, n)
        assert all(table[x] == c.rep for c in cs for x in c.elements)


def test_multiplicative_order():
    assert multiplicative_order(3, 40) == 4
    assert multiplicative_order(2, 63) == 6
    assert multiplicative_order(9, 91) == 3
    with pytest.raises(NonCoprimeModulus):
        multiplicative_order(3, 9)


def test_q_adic():
    d = q_adic_expand(25, 3, 3)
    assert d.digits == (2, 2, 1)
    assert q_adic_value(d) == 25
    assert circular_left_shift(d, 1).value == 23
    with pytest.raises(ShiftOutOfRange):
        circular_left_shift(d, 3)
    with pytest.raises(OutOfRange):
        q_adic_expand(27, 3, 3)


def test_shift_is_multiplication():
    q, m = 3, 4
    n = q**m - 1
    for a in range(1, n):
        assert sorted(shift_values(a, q, m)) == sorted(a * q**j % n for j in range(m))


def test_leader_at_least_examples():
    assert not leader_at_least(38, 23, 3, 4)
    assert leader_at_least(38, 22, 3, 4)


@pytest.mark.parametrize("q,m", [(3, 4), (3, 5), (5, 3), (2, 6)])
def test_shift_criterion_exhaustive(q, m):
    """CL(a) >= b exactly when every circular shift of a is >= b."""
    n = q**m - 1
    leaders = leader_table(q, n)
    for a in range(1, n):
        shifts = shift_values(a, q, m)
        low = min(shifts)
        assert low == leaders[a]
        for b in {1, low, low + 1, n}:
            if 0 < b <= n:
                assert leader_at_least(a, b, q, m) == (leaders[a] >= b)


@pytest.mark.parametrize("q,m", [(3, 4), (5, 3)])
def test_divisor_transfer_exhaustive(q, m):
    n = q**m - 1
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    for mu in divisors:
        for t in range(mu, n, mu):
            assert leader_divisor_transfer(t, mu, q, m) == is_coset_leader(t, q, n)


def test_divisor_transfer_errors():
    with pytest.raises(NonDivisor):
        leader_divisor_transfer(5, 3, 3, 4)
