"""Dual distances of BCH codes and self-dual matrix-product codes."""

from .bch import (
    BCHSpec,
    DefiningSet,
    aly_dual_containing_max_delta,
    bch_bound,
    bch_code,
    bch_defining_set,
    cyclic_code,
    dual_defining_set,
)
from .bounds import (
    BoundClaim,
    BoundReport,
    construction_bound_catalog,
    lemma5_threshold_check,
    lemma6_threshold_check,
    prior_bound_lemma19,
    prior_bound_lemma19190,
    theorem1_bound,
    theorem2_bound,
    verify_claim,
)
from .codes import (
    DistanceResult,
    DualityStatus,
    LinearCode,
    dual,
    hermitian_dual,
    min_distance,
    self_duality_status,
)
from .cyclotomic import coset, coset_leader, leader_at_least, leader_divisor_transfer
from .gf import FieldElement, FieldSpec, field_create, field_of_order
from .mpc import (
    MatrixProductSpec,
    SelfDualCase,
    build_self_dual,
    classify_self_dual_case,
    matrix_product,
    mp_distance_bound,
    ua_distances,
)
from .poly import Polynomial, minimal_polynomial, poly_gcd, poly_lcm

__version__ = "0.1.0"
