"""Univariate polynomials over a finite field, minimal polynomials and lcm."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from .cyclotomic import coset, multiplicative_order
from .errors import (
    DivisionByZeroPolynomial,
    EmptyList,
    FieldMismatch,
    InvariantViolation,
    LengthNotDividingGroupOrder,
    ZeroPolynomial,
)
from .gf import FieldSpec, field_create, field_of_order, subfield_embedding


@dataclass(frozen=True)
class Polynomial:
    """Coefficients low degree first; the zero polynomial has no coefficients."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_list(cls, field: FieldSpec, coeffs: Iterable[int]) -> Polynomial:
        return cls(field, tuple(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, field: FieldSpec, degree: int, coeff: int = 1) -> Polynomial:
        return cls(field, (0,) * degree + (coeff,))

    @classmethod
    def x_n_minus_one(cls, field: FieldSpec, n: int) -> Polynomial:
        return cls(field, (field.neg(1),) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _same_field(self, other: Polynomial) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._same_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Polynomial(f, tuple(out))

    def __neg__(self) -> Polynomial:
        return Polynomial(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._same_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(f, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        return Polynomial(f, tuple(out))

    def scale(self, c: int) -> Polynomial:
        return Polynomial(self.field, tuple(self.field.mul(c, a) for a in self.coeffs))

    def monic(self) -> Polynomial:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no monic associate")
        return self.scale(self.field.inv(self.leading))

    def __divmod__(self, other: Polynomial):
        return poly_divmod(self, other)

    def __mod__(self, other: Polynomial) -> Polynomial:
        return poly_divmod(self, other)[1]

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return poly_divmod(self, other)[0]

    def __call__(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)} over {self.field!r})"


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    a._same_field(b)
    if b.is_zero():
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    f = a.field
    r = list(a.coeffs)
    db = b.degree
    inv_lead = f.inv(b.leading)
    if len(r) <= db:
        return Polynomial(f, ()), a
    quot = [0] * (len(r) - db)
    bc = b.coeffs
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        t = f.mul(c, inv_lead)
        quot[k - db] = t
        for j in range(db + 1):
            if bc[j]:
                r[k - db + j] = f.sub(r[k - db + j], f.mul(t, bc[j]))
    return Polynomial(f, tuple(quot)), Polynomial(f, tuple(r[:db]))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0)`` is the zero polynomial."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a if a.is_zero() else a.monic()


def poly_lcm(ps: Sequence[Polynomial]) -> Polynomial:
    """Monic least common multiple via repeated gcd."""
    if not ps:
        raise EmptyList("lcm of an empty list")
    for p in ps:
        if p.is_zero():
            raise ZeroPolynomial("lcm with the zero polynomial")

    def lcm2(a: Polynomial, b: Polynomial) -> Polynomial:
        return poly_divmod(a * b, poly_gcd(a, b))[0].monic()

    return reduce(lcm2, ps[1:], ps[0].monic())


def poly_prod(ps: Iterable[Polynomial], field: FieldSpec) -> Polynomial:
    return reduce(lambda a, b: a * b, ps, Polynomial(field, (1,)))


@lru_cache(maxsize=None)
def root_of_unity_context(n: int, q: int) -> tuple[FieldSpec, FieldSpec, int, tuple[int, ...]]:
    """``(base field, extension field, beta, embedding)`` for length ``n``.

    ``beta = alpha^((q^ell - 1)/n)`` for the canonical primitive ``alpha`` of
    ``GF(q^ell)``, ``ell = ord_n(q)``; ``embedding`` maps base elements into the
    extension.
    """
    base = field_of_order(q)
    ell = multiplicative_order(q, n)
    big = field_create(base.p, base.e * ell)
    beta = big.pow(big.generator_value, (big.order - 1) // n)
    return base, big, beta, subfield_embedding(base, big)


def minimal_polynomial(i: int, n: int, q: int, ell: int | None = None) -> Polynomial:
    """Minimal polynomial over GF(q) of ``beta^i``, ``beta`` a primitive n-th root of unity."""
    if ell is None:
        ell = multiplicative_order(q, n)
    if (q**ell - 1) % n:
        raise LengthNotDividingGroupOrder(f"{n} does not divide {q}^{ell}-1")
    if ell != multiplicative_order(q, n):
        raise LengthNotDividingGroupOrder(f"ell={ell} is not ord_{n}({q})")
    return _minimal_polynomial(coset(i % n, q, n).rep, n, q)


@lru_cache(maxsize=None)
def _minimal_polynomial(leader: int, n: int, q: int) -> Polynomial:
    base, big, beta, emb = root_of_unity_context(n, q)
    # orbit product computed in the extension field
    prod = [1]
    for j in coset(leader, q, n).elements:
        root = big.neg(big.pow(beta, j))
        nxt = [0] * (len(prod) + 1)
        for k, c in enumerate(prod):
            nxt[k + 1] = big.add(nxt[k + 1], c)
            nxt[k] = big.add(nxt[k], big.mul(c, root))
        prod = nxt
    back = {v: k for k, v in enumerate(emb)}
    coeffs = []
    for c in prod:
        if c not in back:
            raise InvariantViolation(f"minimal polynomial coefficient {c} outside GF({q})")
        coeffs.append(back[c])
    return Polynomial(base, tuple(coeffs))


def cyclic_generator(defining_set: Iterable[int], n: int, q: int) -> Polynomial:
    """``prod_{j in T} (x - beta^j)`` for a coset-closed defining set ``T``."""
    base = field_of_order(q)
    leaders = sorted({coset(j, q, n).rep for j in defining_set})
    return poly_prod((_minimal_polynomial(r, n, q) for r in leaders), base)
