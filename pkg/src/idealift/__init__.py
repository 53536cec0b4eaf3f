"""Grassmannian codes lifted from idempotent-generated ideals of M2(F_p)."""

__version__ = "0.1.0"

from .algebra import (
    FieldElement,
    GLOrderQuery,
    MatrixFp,
    PrimeField,
    gl_order,
    rank,
)
from .errors import BudgetExceeded, TheoremViolation
from .lifting import LiftedCode, lift, lift_code, verify_idempotent_ideal_lift
from .rank_code import (
    RankDistribution,
    RankMetricCode,
    code_from_matrix_set,
    rank_distance,
    rank_distribution,
    verify_delta_equals_omega,
)
from .ring import (
    MatrixRing,
    PrincipalIdeal,
    classify_element,
    enumerate_nontrivial_idempotents,
    enumerate_ring,
    is_idempotent,
    principal_ideal,
)
from .subspace import (
    Subspace,
    SubspaceCode,
    code_from_subspaces,
    enumerate_grassmannian,
    enumerate_projective_space,
    find_partial_spread,
    gaussian_coefficient,
    injection_distance,
    intersection_dim,
    rowspace,
    subspace_distance,
    subspace_sum,
    subspace_weight_egalitarian_check,
    trivial_intersection_distance,
)
from .weights import (
    WeightFunction,
    average_value,
    egalitarian_check,
    hamming_weight,
    homogeneous_check,
    is_weight,
    rank_weight,
    unit_invariance_check,
)

__all__ = [
    "BudgetExceeded",
    "FieldElement",
    "GLOrderQuery",
    "LiftedCode",
    "MatrixFp",
    "MatrixRing",
    "PrimeField",
    "PrincipalIdeal",
    "RankDistribution",
    "RankMetricCode",
    "Subspace",
    "SubspaceCode",
    "TheoremViolation",
    "WeightFunction",
    "average_value",
    "classify_element",
    "code_from_matrix_set",
    "code_from_subspaces",
    "egalitarian_check",
    "enumerate_grassmannian",
    "enumerate_nontrivial_idempotents",
    "enumerate_projective_space",
    "enumerate_ring",
    "find_partial_spread",
    "gaussian_coefficient",
    "gl_order",
    "hamming_weight",
    "homogeneous_check",
    "injection_distance",
    "intersection_dim",
    "is_idempotent",
    "is_weight",
    "lift",
    "lift_code",
    "principal_ideal",
    "rank",
    "rank_distance",
    "rank_distribution",
    "rank_weight",
    "rowspace",
    "subspace_distance",
    "subspace_sum",
    "subspace_weight_egalitarian_check",
    "trivial_intersection_distance",
    "unit_invariance_check",
    "verify_delta_equals_omega",
    "verify_idempotent_ideal_lift",
]
