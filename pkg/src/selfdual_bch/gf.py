"""Finite fields GF(p^e) with a deterministic primitive defining polynomial.

Elements are plain integers in ``[0, p^e)`` whose base-``p`` digits (least
significant first) are the coefficients of a polynomial in ``x`` reduced modulo
the defining polynomial.  The canonical generator is the class of ``x``.

The defining polynomial is the primitive monic polynomial of degree ``e`` with
the smallest value ``sum(c_i * p^i)``.  This is not the Conway polynomial, so
element encodings may differ from those of computer-algebra systems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd
from typing import Sequence

import numpy as np

from .errors import (
    DegreeZero,
    InvalidSubfieldOrder,
    InvariantViolation,
    NonPrimeCharacteristic,
    OrderOverflow,
)

MAX_ORDER = 1 << 20
_ADD_TABLE_LIMIT = 1024
_NUMPY_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n >= 1`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise if ``q`` is not a prime power."""
    if q < 2:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    e = 0
    r = q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return p, e


# -- polynomial helpers over GF(p), lists low-degree first -------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    e = len(f) - 1
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for j in range(e + 1):
                prod[k - e + j] = (prod[k - e + j] - c * f[j]) % p
    return _trim(prod[:e])


def _x_power_is_one(exp: int, f: Sequence[int], p: int) -> bool:
    result = [1]
    base = [0, 1] if len(f) > 2 else _trim([(-f[0]) % p])
    while exp:
        if exp & 1:
            result = _mulmod(result, base, f, p)
        base = _mulmod(base, base, f, p)
        exp >>= 1
    return result == [1]


def _is_primitive(f: Sequence[int], p: int) -> bool:
    if f[0] == 0:
        return False
    n = p ** (len(f) - 1) - 1
    if not _x_power_is_one(n, f, p):
        return False
    return all(not _x_power_is_one(n // r, f, p) for r in prime_factors(n))


def _digits(v: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        v, d = divmod(v, p)
        out.append(d)
    return out


def _find_defining_poly(p: int, e: int) -> tuple[int, ...]:
    for low in range(p**e):
        f = _digits(low, p, e) + [1]
        if _is_primitive(f, p):
            return tuple(f)
    raise InvariantViolation(f"no primitive polynomial of degree {e} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^e) with its defining polynomial (coefficients low to high, monic)."""

    p: int
    e: int
    defining_poly: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return self.p**self.e

    @property
    def q(self) -> int:
        return self.order

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    # -- tables ------------------------------------------------------------

    @cached_property
    def _exp_log(self) -> tuple[list[int], list[int]]:
        """Antilog table of the canonical generator and its inverse."""
        p, e, q = self.p, self.e, self.order
        f = self.defining_poly
        g = self.generator_value
        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        if e == 1:
            v = 1
            for k in range(q - 1):
                exp[k] = v
                log[v] = k
                v = v * g % p
        else:
            digits = [1] + [0] * (e - 1)
            for k in range(q - 1):
                v = 0
                for d in reversed(digits):
                    v = v * p + d
                exp[k] = v
                log[v] = k
                # multiply by x and reduce by the monic defining polynomial
                top = digits[-1]
                digits = [0] + digits[:-1]
                if top:
                    for j in range(e):
                        digits[j] = (digits[j] - top * f[j]) % p
        if any(v < 0 for v in log[1:]):
            raise InvariantViolation(f"{self} generator is not primitive")
        exp[q - 1 :] = exp[: q - 1]
        return exp, log

    @property
    def exp_table(self) -> list[int]:
        return self._exp_log[0]

    @property
    def log_table(self) -> list[int]:
        return self._exp_log[1]

    @cached_property
    def _digit_array(self) -> np.ndarray:
        vals = np.arange(self.order, dtype=np.int64)
        return np.stack([(vals // self.p**k) % self.p for k in range(self.e)], axis=1)

    @cached_property
    def _add_rows(self) -> list[list[int]] | None:
        if self.p == 2 or self.e == 1 or self.order > _ADD_TABLE_LIMIT:
            return None
        return self._add_array().tolist()

    def _add_array(self) -> np.ndarray:
        d = self._digit_array
        s = (d[:, None, :] + d[None, :, :]) % self.p
        weights = self.p ** np.arange(self.e, dtype=np.int64)
        return (s * weights).sum(axis=2)

    @cached_property
    def add_table(self) -> np.ndarray:
        """``order x order`` addition table (small fields only)."""
        if self.order > _NUMPY_TABLE_LIMIT:
            raise OrderOverflow(f"{self} too large for dense tables")
        return self._add_array().astype(np.int16)

    @cached_property
    def mul_table(self) -> np.ndarray:
        if self.order > _NUMPY_TABLE_LIMIT:
            raise OrderOverflow(f"{self} too large for dense tables")
        q = self.order
        t = np.zeros((q, q), dtype=np.int16)
        for a in range(1, q):
            for b in range(1, q):
                t[a, b] = self.mul(a, b)
        return t

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.order)], dtype=np.int16)

    @cached_property
    def inv_table(self) -> np.ndarray:
        return np.array([0] + [self.inv(a) for a in range(1, self.order)], dtype=np.int16)

    # -- scalar arithmetic on integer representations -----------------------

    @property
    def generator_value(self) -> int:
        if self.e == 1:
            return (-self.defining_poly[0]) % self.p
        return self.p

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        rows = self._add_rows
        if rows is not None:
            return rows[a][b]
        p = self.p
        out, w = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out, w = 0, 1
        while a:
            out += ((-(a % p)) % p) * w
            a //= p
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return a * b % self.p
        exp, log = self._exp_log
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.e == 1:
            return pow(a, -1, self.p)
        exp, log = self._exp_log
        return exp[(self.order - 1 - log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if k == 0 else 0
        if self.e == 1:
            return pow(a, k, self.p)
        exp, log = self._exp_log
        return exp[(log[a] * k) % (self.order - 1)]

    def frob(self, a: int, q: int) -> int:
        """``a**q`` for a subfield order ``q``."""
        self._check_subfield_order(q)
        return self.pow(a, q)

    def _check_subfield_order(self, q: int) -> None:
        if q < 2:
            raise InvalidSubfieldOrder(f"{q} is not a subfield order of {self}")
        j, r = 0, q
        while r % self.p == 0:
            r //= self.p
            j += 1
        if r != 1 or self.e % j:
            raise InvalidSubfieldOrder(f"{q} is not a subfield order of {self}")

    def is_in_subfield(self, a: int, q: int) -> bool:
        return self.frob(a, q) == a

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        return n // gcd(n, self.log_table[a]) if self.e > 1 else _mult_order(a, self.p)

    def elements(self) -> range:
        return range(self.order)

    def sqrt_minus_one(self) -> int | None:
        """Smallest integer representative ``mu`` with ``mu*mu == -1``, if any."""
        target = self.neg(1)
        for x in range(1, self.order):
            if self.mul(x, x) == target:
                return x
        return None

    def __call__(self, value: int) -> FieldElement:
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element of {self}")
        return FieldElement(self, value)


def _mult_order(a: int, p: int) -> int:
    k, v = 1, a % p
    while v != 1:
        v = v * a % p
        k += 1
    return k


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __repr__(self) -> str:
        return f"{self.value}@{self.field!r}"


@lru_cache(maxsize=None)
def field_create(p: int, e: int = 1) -> FieldSpec:
    """Construct GF(p^e) with its canonical primitive defining polynomial."""
    if e < 1:
        raise DegreeZero(f"extension degree must be >= 1, got {e}")
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if p**e > MAX_ORDER:
        raise OrderOverflow(f"GF({p}^{e}) exceeds the supported order {MAX_ORDER}")
    return FieldSpec(p, e, _find_defining_poly(p, e))


def field_of_order(q: int) -> FieldSpec:
    p, e = prime_power(q)
    return field_create(p, e)


def primitive_element(f: FieldSpec) -> FieldElement:
    """The canonical generator (root of the defining polynomial)."""
    return FieldElement(f, f.generator_value)


def frobenius(x: FieldElement, q: int) -> FieldElement:
    return FieldElement(x.field, x.field.frob(x.value, q))


@lru_cache(maxsize=None)
def subfield_embedding(small: FieldSpec, big: FieldSpec) -> tuple[int, ...]:
    """Map each element of ``small`` to its image inside ``big``.

    The image of the canonical generator of ``small`` is the smallest power
    ``gamma^k`` (``gamma`` generating the subfield of ``big``) that is a root of
    ``small``'s defining polynomial; the map is then extended multiplicatively.
    """
    if small.p != big.p or big.e % small.e:
        raise InvalidSubfieldOrder(f"{small} is not a subfield of {big}")
    if small.e == 1:
        return tuple(range(small.order))
    qs = small.order
    gamma = big.pow(big.generator_value, (big.order - 1) // (qs - 1))
    f = small.defining_poly
    for k in range(1, qs - 1):
        if gcd(k, qs - 1) != 1:
            continue
        root = big.pow(gamma, k)
        acc = 0
        for c in reversed(f):
            acc = big.add(big.mul(acc, root), c)
        if acc == 0:
            image = [0] * qs
            g = small.generator_value
            for j in range(qs - 1):
                image[small.pow(g, j)] = big.pow(root, j)
            return tuple(image)
    raise InvariantViolation(f"no embedding of {small} into {big}")
