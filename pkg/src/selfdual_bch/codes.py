"""Linear codes over GF(q): canonical generators, duals, Gram tests, distance.

Matrices are numpy integer arrays holding element encodings from
:mod:`selfdual_bch.gf`; arithmetic goes through the field's dense addition
and multiplication tables, so any field with at most 256 elements works.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import FieldMismatch, FieldNotSquareOrder, ZeroDimensional
from .gf import FieldSpec

DEFAULT_BUDGET = 1 << 24
_BLOCK_ELEMENTS = 1 << 22


# -- matrix arithmetic ------------------------------------------------------

def as_matrix(rows, n: int | None = None) -> np.ndarray:
    m = np.asarray(rows, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(0, n or 0) if m.size == 0 else m.reshape(1, -1)
    return m


def mat_add(f: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if f.e == 1:
        return (a + b) % f.p
    return f.add_table[a, b].astype(np.int64)


def mat_scale(f: FieldSpec, c, a: np.ndarray) -> np.ndarray:
    """Entrywise product; ``c`` broadcasts against ``a``."""
    if f.e == 1:
        return (np.asarray(c, dtype=np.int64) * a) % f.p
    return f.mul_table[c, a].astype(np.int64)


def mat_neg(f: FieldSpec, a: np.ndarray) -> np.ndarray:
    if f.e == 1:
        return (-a) % f.p
    return f.neg_table[a].astype(np.int64)


def matmul(f: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if f.e == 1:
        return (a @ b) % f.p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for j in range(a.shape[1]):
        out = mat_add(f, out, mat_scale(f, a[:, j : j + 1], b[j : j + 1, :]))
    return out


def conjugate(f: FieldSpec, a: np.ndarray, q0: int) -> np.ndarray:
    """Entrywise ``x -> x**q0``."""
    table = np.array([f.frob(x, q0) for x in range(f.order)], dtype=np.int64)
    return table[np.asarray(a, dtype=np.int64)]


def rref(f: FieldSpec, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form with zero rows dropped, and pivot columns."""
    r = np.array(m, dtype=np.int64, copy=True)
    if r.size == 0:
        return r.reshape(0, r.shape[1] if r.ndim == 2 else 0), []
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        inv = f.inv(int(r[row, col]))
        r[row] = mat_scale(f, inv, r[row])
        factors = r[:, col].copy()
        factors[row] = 0
        if factors.any():
            r = mat_add(f, r, mat_scale(f, mat_neg(f, factors)[:, None], r[row][None, :]))
        pivots.append(col)
        row += 1
    return r[:row], pivots


def rank(f: FieldSpec, m: np.ndarray) -> int:
    return len(rref(f, m)[1])


def null_space(f: FieldSpec, m: np.ndarray, n: int) -> np.ndarray:
    """Basis (as rows) of ``{x : m x^T = 0}``."""
    r, pivots = rref(f, m)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for idx, j in enumerate(free):
        basis[idx, j] = 1
        for i, pc in enumerate(pivots):
            basis[idx, pc] = f.neg(int(r[i, j]))
    return basis


# -- codes ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear ``[n, k]`` code given by its canonical (RREF) generator matrix."""

    field: FieldSpec
    n: int
    generator: np.ndarray = dc_field(repr=False)
    pivots: tuple[int, ...] = dc_field(repr=False, default=())

    @classmethod
    def from_generator(cls, f: FieldSpec, rows, n: int | None = None) -> LinearCode:
        m = as_matrix(rows, n)
        if n is None:
            n = m.shape[1]
        if m.size and m.shape[1] != n:
            raise ValueError(f"rows have length {m.shape[1]}, expected {n}")
        if m.size and (m.min() < 0 or m.max() >= f.order):
            raise ValueError(f"entries outside {f}")
        m = m.reshape(-1, n)
        g, piv = rref(f, m)
        g.setflags(write=False)
        return cls(f, n, g, tuple(piv))

    @classmethod
    def zero(cls, f: FieldSpec, n: int) -> LinearCode:
        return cls.from_generator(f, np.zeros((0, n), dtype=np.int64), n)

    @classmethod
    def full(cls, f: FieldSpec, n: int) -> LinearCode:
        return cls.from_generator(f, np.eye(n, dtype=np.int64), n)

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def q(self) -> int:
        return self.field.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.field == other.field
            and self.n == other.n
            and np.array_equal(self.generator, other.generator)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over {self.field!r})"

    def contains(self, other: LinearCode) -> bool:
        """True if ``other`` is a subcode of ``self``."""
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.k == 0:
            return True
        return rank(self.field, np.vstack([self.generator, other.generator])) == self.k

    def encode(self, message: Sequence[int]) -> np.ndarray:
        return matmul(self.field, np.asarray(message, dtype=np.int64)[None, :], self.generator)[0]

    def codewords(self) -> Iterator[np.ndarray]:
        """Every codeword; only sensible for tiny codes."""
        for msg in itertools.product(range(self.q), repeat=self.k):
            yield self.encode(msg) if self.k else np.zeros(self.n, dtype=np.int64)


def dual(c: LinearCode) -> LinearCode:
    """Euclidean dual."""
    return LinearCode.from_generator(c.field, null_space(c.field, c.generator, c.n), c.n)


def _sqrt_order(f: FieldSpec) -> int:
    if f.e % 2:
        raise FieldNotSquareOrder(f"{f} does not have square order")
    return f.p ** (f.e // 2)


def hermitian_dual(c: LinearCode) -> LinearCode:
    """Dual under ``<u, v>_H = sum u_i v_i^r`` with ``r^2`` the field order."""
    r = _sqrt_order(c.field)
    conj = conjugate(c.field, c.generator, r)
    return LinearCode.from_generator(c.field, null_space(c.field, conj, c.n), c.n)


def gram(c: LinearCode, inner: str = "euclidean") -> np.ndarray:
    g = c.generator
    if inner == "hermitian":
        other = conjugate(c.field, g, _sqrt_order(c.field))
    elif inner == "euclidean":
        other = g
    else:
        raise ValueError(f"unknown inner product {inner!r}")
    return matmul(c.field, g, other.T)


@dataclass(frozen=True)
class DualityStatus:
    self_orthogonal: bool
    dual_containing: bool
    self_dual: bool


def self_duality_status(c: LinearCode, inner: str = "euclidean") -> DualityStatus:
    d = hermitian_dual(c) if inner == "hermitian" else dual(c)
    so = not gram(c, inner).any()
    dc = not gram(d, inner).any()
    return DualityStatus(so, dc, so and 2 * c.k == c.n)


# -- minimum distance ----------------------------------------------------------

@dataclass(frozen=True)
class DistanceResult:
    """Minimum distance evidence.

    ``kind`` is ``"exact"`` or ``"lower_bound_only"``.  For a lower bound,
    ``swept_weight`` is the largest message weight fully enumerated on an
    information set and ``upper_bound`` the lightest codeword seen.
    """

    kind: str
    value: int
    enumerated: int
    swept_weight: int | None = None
    upper_bound: int | None = None
    witness: tuple[int, ...] | None = dc_field(default=None, compare=False)

    @property
    def exact(self) -> bool:
        return self.kind == "exact"

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "enumerated": self.enumerated,
            "swept_weight": self.swept_weight,
            "upper_bound": self.upper_bound,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def _span_block(f: FieldSpec, rows: np.ndarray, n: int) -> np.ndarray:
    """All ``q^len(rows)`` linear combinations, message digits little-endian."""
    block = np.zeros((1, n), dtype=np.int64)
    for row in rows:
        parts = [block]
        for a in range(1, f.order):
            parts.append(mat_add(f, block, mat_scale(f, a, row[None, :])))
        block = np.concatenate(parts, axis=0)
    return block


def _pack_bits(rows: np.ndarray) -> np.ndarray:
    packed = np.packbits(rows.astype(np.uint8), axis=1, bitorder="little")
    pad = (-packed.shape[1]) % 8
    if pad:
        packed = np.pad(packed, ((0, 0), (0, pad)))
    return packed.view(np.uint64)


def _unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    return np.unpackbits(words.view(np.uint8), bitorder="little")[:n].astype(np.int64)


def _exhaustive_binary(c: LinearCode) -> tuple[int, np.ndarray, int]:
    k, n = c.k, c.n
    rows = _pack_bits(c.generator)
    low = min(k, 18)
    block = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for r in rows[:low]:
        block = np.concatenate([block, block ^ r], axis=0)
    best, best_word = n + 1, None
    high_rows = rows[low:]
    offset = np.zeros(rows.shape[1], dtype=np.uint64)
    # binary reflected Gray code over the high rows: one XOR per step
    for step in range(1 << len(high_rows)):
        if step:
            offset = offset ^ high_rows[(step & -step).bit_length() - 1]
        words = block ^ offset
        w = np.bitwise_count(words).sum(axis=1, dtype=np.int64)
        if step == 0:
            w[0] = n + 1
        i = int(np.argmin(w))
        if w[i] < best:
            best, best_word = int(w[i]), words[i].copy()
    return best, _unpack_bits(best_word, n), 1 << k


def _exhaustive_general(c: LinearCode) -> tuple[int, np.ndarray, int]:
    f, k, n = c.field, c.k, c.n
    q = f.order
    low = min(k, max(1, int(math.log(max(q, _BLOCK_ELEMENTS // n), q))))
    block = _span_block(f, c.generator[:low], n)
    high = _span_block(f, c.generator[low:], n)
    best, best_word = n + 1, None
    for idx, offset in enumerate(high):
        words = mat_add(f, block, offset[None, :])
        w = np.count_nonzero(words, axis=1)
        if idx == 0:
            w[0] = n + 1
        i = int(np.argmin(w))
        if w[i] < best:
            best, best_word = int(w[i]), words[i].copy()
    return best, best_word, q**k


def _weight_sweep(c: LinearCode, budget: int) -> DistanceResult:
    """Enumerate messages of low Hamming weight on the pivot information set.

    On the pivot columns a codeword equals its message, so every codeword not
    enumerated has weight at least ``w + 1`` when all messages of weight
    ``<= w`` were examined.
    """
    f, k, n = c.field, c.k, c.n
    q = f.order
    g = c.generator
    best, best_word, examined, swept = n + 1, None, 0, 0
    for w in range(1, k + 1):
        count = math.comb(k, w) * (q - 1) ** w
        if examined + count > budget:
            break
        values = np.array(list(itertools.product(range(1, q), repeat=w)), dtype=np.int64)
        supports = itertools.combinations(range(k), w)
        chunk = max(1, _BLOCK_ELEMENTS // max(1, len(values) * n))
        while True:
            sel = list(itertools.islice(supports, chunk))
            if not sel:
                break
            idx = np.array(sel, dtype=np.int64)
            acc = np.zeros((len(sel), len(values), n), dtype=np.int64)
            for t in range(w):
                rows = g[idx[:, t]][:, None, :]
                acc = mat_add(f, acc, mat_scale(f, values[None, :, t, None], rows))
            acc = acc.reshape(-1, n)
            wt = np.count_nonzero(acc, axis=1)
            i = int(np.argmin(wt))
            if wt[i] < best:
                best, best_word = int(wt[i]), acc[i].copy()
        examined += count
        swept = w
        if best <= swept + 1:
            break
    witness = tuple(int(x) for x in best_word) if best_word is not None else None
    if best <= swept + 1 or swept == k:
        return DistanceResult("exact", best, examined, swept, best, witness)
    return DistanceResult(
        "lower_bound_only", swept + 1, examined, swept, best if best <= n else None, witness
    )


def min_distance(c: LinearCode, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Minimum nonzero Hamming weight.

    Exhaustive over all ``q^k`` messages when that fits in ``budget``;
    otherwise a certified lower bound from a low-weight information-set sweep.
    """
    if c.k == 0:
        raise ZeroDimensional("the zero code has no minimum distance")
    q = c.field.order
    if q**c.k <= budget:
        if q == 2:
            best, word, count = _exhaustive_binary(c)
        else:
            best, word, count = _exhaustive_general(c)
        return DistanceResult("exact", best, count, None, best, tuple(int(x) for x in word))
    return _weight_sweep(c, budget)


def weight(v: Iterable[int]) -> int:
    return int(np.count_nonzero(np.asarray(list(v))))
