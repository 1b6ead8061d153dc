"""Matrix-product codes ``[C_1, ..., C_s]A`` and self-dual codes ``[D, D^perp]A``."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .codes import (
    DistanceResult,
    DualityStatus,
    LinearCode,
    dual,
    gram,
    hermitian_dual,
    mat_scale,
    min_distance,
    rank,
    self_duality_status,
)
from .errors import (
    ClassificationRejected,
    FieldMismatch,
    GramNonzero,
    LengthMismatch,
    RankDeficientMatrix,
    SingularMatrix,
)
from .gf import FieldSpec, field_of_order


def _as_int_matrix(a) -> np.ndarray:
    m = np.array([[int(x) for x in row] for row in a], dtype=np.int64)
    if m.ndim != 2:
        raise ValueError("A must be a matrix")
    return m


@dataclass(frozen=True)
class MatrixProductSpec:
    constituents: tuple[LinearCode, ...]
    A: np.ndarray = dc_field(repr=False)

    def __post_init__(self):
        cs = tuple(self.constituents)
        object.__setattr__(self, "constituents", cs)
        a = _as_int_matrix(self.A)
        a.setflags(write=False)
        object.__setattr__(self, "A", a)
        if not cs:
            raise LengthMismatch("no constituent codes")
        f, n = cs[0].field, cs[0].n
        for c in cs[1:]:
            if c.field != f:
                raise FieldMismatch(f"{c.field} vs {f}")
            if c.n != n:
                raise LengthMismatch(f"constituent lengths {c.n} and {n} differ")
        s, t = a.shape
        if s != len(cs):
            raise LengthMismatch(f"A has {s} rows but there are {len(cs)} constituents")
        if s > t:
            raise RankDeficientMatrix(f"A is {s}x{t} with s > t")
        if a.min() < 0 or a.max() >= f.order:
            raise ValueError(f"entries of A outside {f}")
        if rank(f, a) != s:
            raise RankDeficientMatrix("A does not have full row rank")

    @property
    def field(self) -> FieldSpec:
        return self.constituents[0].field

    @property
    def n(self) -> int:
        return self.constituents[0].n

    @property
    def s(self) -> int:
        return self.A.shape[0]

    @property
    def t(self) -> int:
        return self.A.shape[1]


def matrix_product(spec: MatrixProductSpec) -> LinearCode:
    """The ``[n*t, sum k_i]`` code with block generator ``(a_ij G_i)``."""
    f, n = spec.field, spec.n
    blocks = []
    for i, c in enumerate(spec.constituents):
        if c.k == 0:
            continue
        blocks.append(np.hstack([mat_scale(f, int(a), c.generator) for a in spec.A[i]]))
    rows = np.vstack(blocks) if blocks else np.zeros((0, n * spec.t), dtype=np.int64)
    return LinearCode.from_generator(f, rows, n * spec.t)


def ua_distances(A, f: FieldSpec) -> list[int]:
    """``d(U_A(k))`` for ``k = 1..s``, where ``U_A(k)`` is spanned by the first k rows."""
    a = _as_int_matrix(A)
    s, t = a.shape
    if rank(f, a) != s:
        raise RankDeficientMatrix("A does not have full row rank")
    return [min_distance(LinearCode.from_generator(f, a[:k], t)).value for k in range(1, s + 1)]


def is_triangular(A) -> bool:
    a = _as_int_matrix(A)
    s = a.shape[0]
    upper = all(a[i, j] == 0 for i in range(s) for j in range(min(i, a.shape[1])))
    lower = all(a[i, j] == 0 for i in range(s) for j in range(i + 1, a.shape[1]))
    return upper or lower


@dataclass(frozen=True)
class MPBound:
    """``value = min_i d_i * d(U_A(i))`` over constituents with ``k_i > 0``.

    ``exact`` is a certificate: every ``d_i`` is exact and a minimizing term
    ``j`` has ``wt(R_j) = d(U_A(j))``, so ``c (x) R_j`` with ``c`` of weight
    ``d_j`` attains the bound.
    """

    value: int
    exact: bool
    triangular: bool
    terms: tuple[int, ...]
    constituent_distances: tuple[int, ...]
    ua: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "triangular": self.triangular,
            "terms": list(self.terms),
            "constituent_distances": list(self.constituent_distances),
            "ua_distances": list(self.ua),
        }


def mp_distance_bound(
    spec: MatrixProductSpec,
    distances: Sequence[DistanceResult | int] | None = None,
) -> MPBound:
    """Blackmore-Norton lower bound on ``d([C_1, ..., C_s]A)``.

    Integer ``distances`` are taken as lower bounds (not exact).
    """
    f = spec.field
    if distances is None:
        distances = [min_distance(c) if c.k else None for c in spec.constituents]
    ua = ua_distances(spec.A, f)
    row_wt = [int(np.count_nonzero(r)) for r in spec.A]
    terms, ds, exact_d = [], [], []
    for i, (c, d) in enumerate(zip(spec.constituents, distances)):
        if c.k == 0:
            ds.append(0)
            continue
        if isinstance(d, DistanceResult):
            ds.append(d.value)
            exact_d.append(d.exact)
        else:
            ds.append(int(d))
            exact_d.append(False)
        terms.append((ds[-1] * ua[i], i))
    if not terms:
        # the zero code: nothing to bound
        return MPBound(0, True, is_triangular(spec.A), (), tuple(ds), tuple(ua))
    value = min(v for v, _ in terms)
    attained = any(v == value and row_wt[i] == ua[i] for v, i in terms)
    return MPBound(
        value,
        all(exact_d) and attained,
        is_triangular(spec.A),
        tuple(v for v, _ in terms),
        tuple(ds),
        tuple(ua),
    )


# -- self-dual matrix-product codes ----------------------------------------------

@dataclass(frozen=True)
class SelfDualCase:
    """Which listed case makes ``[D, D^perp]A`` self-dual.

    ``case_id`` is ``None`` for the characteristic-2 situation ``a != b``,
    ``c != d`` with ``D`` self-dual, which satisfies the Gram conditions but
    is not among the listed cases.
    """

    case_id: int | None
    parity: str
    mu: int | None
    requires: str
    relations: str

    def as_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "parity": self.parity,
            "mu": self.mu,
            "requires": self.requires,
            "relations": self.relations,
        }


def parity_class(q: int) -> str:
    if q % 2 == 0:
        return "even"
    return "1mod4" if q % 4 == 1 else "3mod4"


def sqrt_minus_one(f: FieldSpec) -> int | None:
    """Smallest integer code ``mu`` with ``mu^2 = -1``; ``None`` if there is none."""
    return f.sqrt_minus_one()


def _requirement(top_free: bool, bottom_free: bool) -> str:
    if top_free and bottom_free:
        return "none"
    if top_free:
        return "dual_containing"
    if bottom_free:
        return "self_orthogonal"
    return "self_dual"


def classify_self_dual_case(q: int, A, d_status: DualityStatus) -> SelfDualCase:
    """Decide whether ``[D, D^perp]A`` is self-dual from the Gram conditions.

    With ``G``, ``H`` generator and parity-check matrices of ``D`` the Gram
    matrix of the product is block diagonal with blocks ``(a^2+b^2) G G^T``
    and ``(c^2+d^2) H H^T``.
    """
    f = field_of_order(q)
    (a, b), (c, d) = [[int(x) for x in row] for row in _as_int_matrix(A)]
    if f.mul(a, d) == f.mul(b, c):
        raise SingularMatrix("ad = bc")
    top_free = f.add(f.mul(a, a), f.mul(b, b)) == 0
    bottom_free = f.add(f.mul(c, c), f.mul(d, d)) == 0
    top_ok = top_free or d_status.self_orthogonal
    bottom_ok = bottom_free or d_status.dual_containing
    if not (top_ok and bottom_ok):
        failing = []
        if not top_ok:
            failing.append("(a^2+b^2) G G^T != 0: a^2+b^2 != 0 and D is not self-orthogonal")
        if not bottom_ok:
            failing.append("(c^2+d^2) H H^T != 0: c^2+d^2 != 0 and D is not dual-containing")
        raise ClassificationRejected("; ".join(failing))

    parity = parity_class(q)
    req = _requirement(top_free, bottom_free)
    mu = f.sqrt_minus_one() if parity == "1mod4" else None
    if parity == "even":
        # a^2 + b^2 = (a + b)^2
        if top_free:
            return SelfDualCase(1, parity, None, "dual_containing", "a = b, c != d")
        if bottom_free:
            return SelfDualCase(2, parity, None, "self_orthogonal", "c = d, a != b")
        return SelfDualCase(None, parity, None, "self_dual", "a != b, c != d")
    if parity == "3mod4":
        return SelfDualCase(3, parity, None, "self_dual", "-1 is a non-square")
    if mu is None or f.mul(mu, mu) != f.neg(1):
        raise GramNonzero(f"no square root of -1 found in GF({q})")
    if top_free and bottom_free:
        rel = "a = mu b, c = -mu d" if a == f.mul(mu, b) else "a = -mu b, c = mu d"
        return SelfDualCase(4, parity, mu, req, rel)
    if top_free:
        return SelfDualCase(5, parity, mu, req, "a = +-mu b, c != +-mu d")
    if bottom_free:
        return SelfDualCase(6, parity, mu, req, "a != +-mu b, c = +-mu d")
    return SelfDualCase(7, parity, mu, req, "a != +-mu b, c != +-mu d")


@dataclass(frozen=True)
class SelfDualCertificate:
    inner: str
    case: SelfDualCase | None
    length: int
    dimension: int
    gram_zero: bool
    status: DualityStatus

    def as_dict(self) -> dict:
        return {
            "inner": self.inner,
            "case": self.case.as_dict() if self.case else None,
            "length": self.length,
            "dimension": self.dimension,
            "gram_zero": self.gram_zero,
            "self_orthogonal": self.status.self_orthogonal,
            "dual_containing": self.status.dual_containing,
            "self_dual": self.status.self_dual,
        }


def build_self_dual(
    D: LinearCode, A, inner: str = "euclidean"
) -> tuple[LinearCode, SelfDualCertificate, MatrixProductSpec]:
    """Build ``[D, D^perp]A`` (or ``[D, D^perpH]A``) and certify it is self-dual."""
    f = D.field
    if inner == "euclidean":
        case = classify_self_dual_case(f.order, A, self_duality_status(D))
        spec = MatrixProductSpec((D, dual(D)), A)
    elif inner == "hermitian":
        case = None
        spec = MatrixProductSpec((D, hermitian_dual(D)), A)
    else:
        raise ValueError(f"unknown inner product {inner!r}")
    c = matrix_product(spec)
    gram_zero = not gram(c, inner).any()
    if not gram_zero:
        if case is not None:
            raise GramNonzero("accepted classification produced a nonzero Gram matrix")
        raise ClassificationRejected("conjugate Gram matrix of [D, D^perpH]A is nonzero")
    status = self_duality_status(c, inner)
    if 2 * c.k != c.n or not status.self_dual:
        raise GramNonzero(f"[{c.n}, {c.k}] code failed the independent self-duality check")
    return c, SelfDualCertificate(inner, case, c.n, c.k, gram_zero, status), spec


def random_code(f: FieldSpec, n: int, k: int, rng: np.random.Generator) -> LinearCode:
    """A uniformly drawn generator matrix of full rank ``k``."""
    while True:
        g = rng.integers(0, f.order, size=(k, n))
        if rank(f, g) == k:
            return LinearCode.from_generator(f, g, n)

