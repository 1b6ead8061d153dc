import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from selfdual_bch.codes import (
    LinearCode,
    dual,
    gram,
    hermitian_dual,
    min_distance,
    rank,
    self_duality_status,
    weight,
)
from selfdual_bch.errors import FieldNotSquareOrder, ZeroDimensional
from selfdual_bch.gf import field_of_order
from selfdual_bch.mpc import random_code


def test_hamming(hamming):
    assert (hamming.n, hamming.k) == (7, 4)
    d = min_distance(hamming)
    assert d.exact and d.value == 3
    assert weight(d.witness) == 3
    assert dual(hamming).k == 3
    assert min_distance(dual(hamming)).value == 4


def test_tetracode_is_self_dual(tetracode):
    st_ = self_duality_status(tetracode)
    assert st_.self_orthogonal and st_.dual_containing and st_.self_dual
    assert dual(tetracode) == tetracode
    assert min_distance(tetracode).value == 3


def test_canonical_form_ignores_row_operations(hamming, gf2):
    shuffled = hamming.generator[[3, 1, 0, 2]].copy()
    shuffled[0] ^= shuffled[1]
    assert LinearCode.from_generator(gf2, shuffled) == hamming


def test_dual_of_dual_and_containment(hamming):
    assert dual(dual(hamming)) == hamming
    assert hamming.contains(dual(hamming))
    assert not dual(hamming).contains(hamming)


def test_zero_dimensional(gf2):
    with pytest.raises(ZeroDimensional):
        min_distance(LinearCode.zero(gf2, 5))


def test_tiny_budget_gives_trivial_lower_bound():
    f = field_of_order(3)
    rng = np.random.default_rng(0)
    c = random_code(f, 40, 20, rng)
    d = min_distance(c, budget=10)
    assert not d.exact
    assert d.kind == "lower_bound_only"
    assert d.value == 1 and d.swept_weight == 0


def test_hermitian_dual_gf4():
    f = field_of_order(4)
    c = LinearCode.from_generator(f, [[1, 1]])
    assert hermitian_dual(c) == c
    assert self_duality_status(c, "hermitian").self_dual
    assert not gram(c, "hermitian").any()
    with pytest.raises(FieldNotSquareOrder):
        hermitian_dual(LinearCode.from_generator(field_of_order(8), [[1, 1]]))


def _brute_distance(c):
    return min(weight(w) for w in c.codewords() if any(w))


@pytest.mark.parametrize("q", [2, 3, 4])
def test_distance_matches_brute_force(q):
    f = field_of_order(q)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(4, 9), st.integers(0, 2**32 - 1))
    def check(n, seed):
        rng = np.random.default_rng(seed)
        k = int(rng.integers(1, min(n, 4) + 1))
        c = random_code(f, n, k, rng)
        d = min_distance(c)
        assert d.exact
        assert d.value == _brute_distance(c)
        assert dual(c).k == n - k
        assert rank(f, np.vstack([c.generator, dual(c).generator])) <= n

    check()


def test_information_set_search_is_a_lower_bound():
    f = field_of_order(2)
    rng = np.random.default_rng(5)
    c = random_code(f, 30, 14, rng)
    full = min_distance(c)
    partial = min_distance(c, budget=600)
    assert full.exact
    assert partial.value <= full.value
    if not partial.exact:
        assert partial.upper_bound >= full.value
