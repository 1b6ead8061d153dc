"""BCH codes through their defining sets, plus dual defining sets and the BCH bound."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable

import numpy as np

from .codes import LinearCode
from .cyclotomic import coset, multiplicative_order
from .errors import DeltaOutOfRange, FieldNotSquareOrder, NonCoprime, OutOfRange
from .gf import prime_power
from .poly import Polynomial, cyclic_generator, minimal_polynomial, poly_lcm


@dataclass(frozen=True)
class DefiningSet:
    """A union of q-cyclotomic cosets modulo ``n``; ``m = ord_n(q)``."""

    n: int
    q: int
    m: int
    elements: frozenset[int]

    @classmethod
    def of(cls, n: int, q: int, elements: Iterable[int]) -> DefiningSet:
        return cls(n, q, multiplicative_order(q, n), frozenset(int(i) % n for i in elements))

    def sorted(self) -> list[int]:
        return sorted(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, i: int) -> bool:
        return i % self.n in self.elements

    def is_coset_closed(self) -> bool:
        return all(i * self.q % self.n in self.elements for i in self.elements)

    def complement(self) -> DefiningSet:
        return DefiningSet(self.n, self.q, self.m, frozenset(range(self.n)) - self.elements)

    def negated(self, factor: int = 1) -> DefiningSet:
        """``{(n - factor*i) mod n : i in T}``."""
        n = self.n
        return DefiningSet(n, self.q, self.m, frozenset((n - factor * i) % n for i in self.elements))


@dataclass(frozen=True)
class BCHSpec:
    n: int
    q: int
    delta: int
    b: int
    defining_set: DefiningSet
    generator: Polynomial

    @property
    def dimension(self) -> int:
        return self.n - len(self.defining_set)


def _check_params(n: int, q: int, delta: int) -> None:
    if n < 1:
        raise OutOfRange(f"length {n} must be positive")
    if gcd(n, q) != 1:
        raise NonCoprime(f"gcd({n}, {q}) != 1")
    if not 2 <= delta <= n:
        raise DeltaOutOfRange(f"designed distance {delta} outside [2, {n}]")


def bch_defining_set(n: int, q: int, delta: int, b: int = 1) -> DefiningSet:
    """Union of the cosets of ``b, b+1, ..., b+delta-2`` modulo ``n``."""
    _check_params(n, q, delta)
    elems: set[int] = set()
    for i in range(b, b + delta - 1):
        j = i % n
        if j not in elems:
            elems.update(coset(j, q, n).elements)
    return DefiningSet.of(n, q, elems)


def cyclic_code_from_generator(g: Polynomial, n: int) -> LinearCode:
    """Code spanned by the ``n - deg g`` cyclic shifts of ``g``."""
    k = n - g.degree
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        rows[i, i : i + g.degree + 1] = g.coeffs
    return LinearCode.from_generator(g.field, rows, n)


def cyclic_code(t: DefiningSet) -> LinearCode:
    """The cyclic code whose defining set (w.r.t. the canonical ``beta``) is ``t``."""
    return cyclic_code_from_generator(cyclic_generator(t.elements, t.n, t.q), t.n)


def bch_code(n: int, q: int, delta: int, b: int = 1) -> tuple[BCHSpec, LinearCode]:
    """The BCH code with generator ``lcm(m_b, ..., m_{b+delta-2})``."""
    t = bch_defining_set(n, q, delta, b)
    leaders = sorted({coset(i % n, q, n).rep for i in range(b, b + delta - 1)})
    g = poly_lcm([minimal_polynomial(r, n, q, t.m) for r in leaders])
    spec = BCHSpec(n, q, delta, b, t, g)
    return spec, cyclic_code_from_generator(g, n)


def _sqrt_q(q: int) -> int:
    p, e = prime_power(q)
    r = isqrt(q)
    if e % 2 or r * r != q:
        raise FieldNotSquareOrder(f"{q} is not a square prime power")
    return r


def dual_defining_set(t: DefiningSet, inner: str = "euclidean") -> DefiningSet:
    """``Z_n \\ T^{-1}`` (Euclidean) or ``Z_n \\ T^{-sqrt(q)}`` (Hermitian)."""
    if inner == "euclidean":
        return t.negated(1).complement()
    if inner == "hermitian":
        return t.negated(_sqrt_q(t.q)).complement()
    raise ValueError(f"unknown inner product {inner!r}")


def longest_run(t: DefiningSet) -> tuple[int, int]:
    """``(start, length)`` of the longest cyclically consecutive run in ``t``."""
    n = t.n
    if not t.elements:
        return 0, 0
    if len(t.elements) == n:
        return 0, n
    best_len, best_start = 0, 0
    # start scanning just after a gap so wrap-around runs are seen whole
    gap = next(i for i in range(n) if i not in t.elements)
    run_len, run_start = 0, None
    for k in range(1, n + 1):
        i = (gap + k) % n
        if i in t.elements:
            if run_len == 0:
                run_start = i
            run_len += 1
            if run_len > best_len:
                best_len, best_start = run_len, run_start
        else:
            run_len = 0
    return best_start, best_len


def bch_bound(t: DefiningSet) -> int:
    """``1 +`` the longest run of consecutive exponents in ``t`` (cyclically)."""
    if len(t.elements) == t.n:
        raise OutOfRange("defining set is all of Z_n (the zero code)")
    return 1 + longest_run(t)[1]


def contains_range(t: DefiningSet, start: int, stop: int) -> list[int]:
    """Elements of ``[start, stop]`` missing from ``t`` (empty when contained)."""
    return [i for i in range(start, stop + 1) if i % t.n not in t.elements]


def aly_dual_containing_max_delta(n: int, q: int, m: int | None = None) -> int:
    """Largest designed distance guaranteed dual-containing for narrow-sense BCH codes."""
    if m is None:
        m = multiplicative_order(q, n)
    odd = m % 2
    return n * (q ** ((m + 1) // 2) - 1 - (q - 2) * odd) // (q**m - 1)
