"""q-cyclotomic cosets, coset leaders and q-adic digit manipulations.

Also hosts the two coset-leader lemmas used by the dual-distance arguments:
the circular-shift criterion (``leader_at_least``) and the transfer of
leadership through a common divisor (``leader_divisor_transfer``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import (
    InvariantViolation,
    NonCoprimeModulus,
    NonDivisor,
    OutOfRange,
    ShiftOutOfRange,
)

MAX_MODULUS = 1 << 40
ORDER_CAP = 10**6


@dataclass(frozen=True)
class CyclotomicCoset:
    n: int
    q: int
    rep: int
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, i: int) -> bool:
        return i % self.n in self.elements

    def orbit(self) -> list[int]:
        """Elements in orbit order ``rep, rep*q, rep*q^2, ...``."""
        out, i = [], self.rep
        for _ in range(len(self.elements)):
            out.append(i)
            i = i * self.q % self.n
        return out


@dataclass(frozen=True)
class QAdicDigits:
    """Fixed-width base-``q`` digits, most significant first."""

    digits: tuple[int, ...]
    q: int

    @property
    def m(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        return q_adic_value(self)


def _check(q: int, n: int) -> None:
    if n < 1 or n > MAX_MODULUS:
        raise OutOfRange(f"modulus {n} outside [1, 2^40]")
    if gcd(q, n) != 1:
        raise NonCoprimeModulus(f"gcd({q}, {n}) != 1")


def multiplicative_order(q: int, n: int) -> int:
    """``ord_n(q)``; 1 when ``n == 1``."""
    _check(q, n)
    if n == 1:
        return 1
    k, v = 1, q % n
    while v != 1:
        v = v * q % n
        k += 1
        if k > ORDER_CAP:
            raise OutOfRange(f"ord_{n}({q}) exceeds {ORDER_CAP}")
    return k


@lru_cache(maxsize=1 << 16)
def coset(i: int, q: int, n: int) -> CyclotomicCoset:
    """The q-cyclotomic coset of ``i`` modulo ``n``."""
    _check(q, n)
    if not 0 <= i < n:
        raise OutOfRange(f"{i} not in [0, {n})")
    orbit, j = [], i
    while True:
        orbit.append(j)
        j = j * q % n
        if j == i:
            break
        if len(orbit) > n:
            raise InvariantViolation("orbit did not close")
    return CyclotomicCoset(n, q, min(orbit), tuple(sorted(orbit)))


def coset_leader(i: int, q: int, n: int) -> int:
    return coset(i, q, n).rep


def all_cosets(q: int, n: int) -> list[CyclotomicCoset]:
    """Partition of ``Z_n`` into q-cyclotomic cosets, ordered by leader."""
    _check(q, n)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if not seen[i]:
            c = coset(i, q, n)
            for j in c.elements:
                seen[j] = 1
            out.append(c)
    return out


def leader_table(q: int, n: int) -> list[int]:
    """``table[i]`` is the coset leader of ``i`` modulo ``n``."""
    table = [0] * n
    for c in all_cosets(q, n):
        for j in c.elements:
            table[j] = c.rep
    return table


def q_adic_expand(i: int, q: int, m: int) -> QAdicDigits:
    if not 0 <= i < q**m:
        raise OutOfRange(f"{i} not in [0, {q}^{m})")
    digits = []
    for _ in range(m):
        i, d = divmod(i, q)
        digits.append(d)
    return QAdicDigits(tuple(reversed(digits)), q)


def q_adic_value(d: QAdicDigits) -> int:
    v = 0
    for x in d.digits:
        v = v * d.q + x
    return v


def circular_left_shift(d: QAdicDigits, j: int) -> QAdicDigits:
    """Rotate the digit vector ``j`` places toward the most significant end."""
    if not 0 <= j <= d.m - 1:
        raise ShiftOutOfRange(f"shift {j} outside [0, {d.m - 1}]")
    return QAdicDigits(d.digits[j:] + d.digits[:j], d.q)


def shift_values(a: int, q: int, m: int) -> list[int]:
    d = q_adic_expand(a, q, m)
    return [circular_left_shift(d, j).value for j in range(m)]


def leader_at_least(a: int, b: int, q: int, m: int) -> bool:
    """True iff every circular shift of the digits of ``a`` is at least ``b``.

    For ``0 < a < q^m - 1`` this is equivalent to the coset leader of ``a``
    modulo ``q^m - 1`` being at least ``b``.
    """
    top = q**m - 1
    if not (0 < a <= top and 0 < b <= top):
        raise OutOfRange(f"need 0 < a, b <= {top}")
    return min(shift_values(a, q, m)) >= b


def is_coset_leader(t: int, q: int, n: int) -> bool:
    return coset(t % n, q, n).rep == t


def leader_divisor_transfer(t: int, mu: int, q: int, m: int) -> bool:
    """Whether ``t`` is a coset leader mod ``q^m-1`` (equivalently ``t/mu`` mod ``(q^m-1)/mu``).

    Both sides are computed independently; disagreement raises
    :class:`InvariantViolation`.
    """
    n = q**m - 1
    if not 0 < t < n:
        raise OutOfRange(f"need 0 < t < {n}")
    if mu < 1 or t % mu or n % mu:
        raise NonDivisor(f"{mu} does not divide both {t} and {n}")
    lhs = is_coset_leader(t, q, n)
    rhs = is_coset_leader(t // mu, q, n // mu)
    if lhs != rhs:
        raise InvariantViolation(f"leader transfer fails for t={t}, mu={mu}, q={q}, m={m}")
    return lhs
