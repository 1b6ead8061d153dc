import pytest

from selfdual_bch.bch import (
    DefiningSet,
    aly_dual_containing_max_delta,
    bch_bound,
    bch_code,
    bch_defining_set,
    contains_range,
    cyclic_code,
    dual_defining_set,
    longest_run,
)
from selfdual_bch.codes import dual, hermitian_dual, min_distance, self_duality_status
from selfdual_bch.errors import DeltaOutOfRange, FieldNotSquareOrder, NonCoprime


def test_defining_set_example():
    t = bch_defining_set(40, 3, 5)
    assert t.sorted() == [1, 2, 3, 4, 6, 9, 12, 14, 18, 27, 28, 36]
    spec, c = bch_code(40, 3, 5)
    assert (c.n, c.k) == (40, 28)
    assert spec.dimension == 28
    assert spec.generator.degree == 12


def test_dual_defining_set_run():
    t = bch_defining_set(40, 3, 5)
    td = dual_defining_set(t)
    assert contains_range(td, 14, 21) == []
    assert bch_bound(td) == 9


def test_hermitian_dual_run():
    t = bch_defining_set(91, 9, 11)
    th = dual_defining_set(t, "hermitian")
    assert contains_range(th, 11, 19) == []
    with pytest.raises(FieldNotSquareOrder):
        dual_defining_set(bch_defining_set(40, 3, 5), "hermitian")


def test_hamming_as_bch():
    _, c = bch_code(7, 2, 3)
    assert (c.n, c.k) == (7, 4)
    assert min_distance(c).value == 3


def test_errors():
    with pytest.raises(NonCoprime):
        bch_defining_set(9, 3, 3)
    with pytest.raises(DeltaOutOfRange):
        bch_defining_set(40, 3, 1)
    with pytest.raises(DeltaOutOfRange):
        bch_defining_set(40, 3, 41)


def test_longest_run_wraps():
    t = DefiningSet.of(10, 3, [8, 9, 0, 1, 4])
    assert longest_run(t) == (8, 4)
    assert bch_bound(t) == 5


@pytest.mark.parametrize("n,q", [(13, 3), (40, 3), (15, 2), (26, 5)])
def test_defining_sets_are_coset_closed(n, q):
    for delta in range(2, n + 1):
        t = bch_defining_set(n, q, delta)
        assert t.is_coset_closed()
        assert dual_defining_set(t).is_coset_closed()
        if len(t) < n:
            assert bch_bound(t) >= delta


@pytest.mark.parametrize("n,q", [(13, 3), (40, 3)])
def test_dual_structure_matches_defining_set(n, q):
    for delta in range(2, n + 1):
        spec, c = bch_code(n, q, delta)
        assert cyclic_code(spec.defining_set) == c
        assert dual(c) == cyclic_code(dual_defining_set(spec.defining_set))


def test_hermitian_dual_structure():
    for delta in (2, 5, 11):
        spec, c = bch_code(91, 9, delta)
        assert hermitian_dual(c) == cyclic_code(dual_defining_set(spec.defining_set, "hermitian"))


@pytest.mark.parametrize("n,q,expected", [(40, 3, 4), (63, 2, 7), (80, 3, 8)])
def test_aly_range(n, q, expected):
    top = aly_dual_containing_max_delta(n, q)
    assert top == expected
    for delta in range(2, top + 1):
        _, c = bch_code(n, q, delta)
        assert self_duality_status(c).dual_containing
    _, c = bch_code(n, q, top + 1)
    assert not self_duality_status(c).dual_containing


def test_bch_bound_holds_for_small_codes():
    for delta in range(2, 8):
        spec, c = bch_code(15, 2, delta)
        if c.k:
            assert min_distance(c).value >= bch_bound(spec.defining_set)
