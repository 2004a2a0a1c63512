"""Exact K-theoretic invariants of Cuntz-Krieger and unital Kirchberg algebras."""

__version__ = "0.1.0"

from .linalg import IntMatrix, SnfResult, cokernel, kernel_rank, smith_normal_form
from .groups import (
    FgAbelianGroup,
    GroupPresentation,
    PointedGroup,
    canonicalize,
    direct_sum,
    element_order,
    is_isomorphic,
    pointed_isomorphic,
    quotient_by_element,
    w_invariant,
)
from .primary import (
    ExponentMultiset,
    NotRecoverable,
    PrimaryDecomposition,
    exists_quotient_element,
    multiset_intersection,
    odd_multiplicity_set,
    primary_decomposition,
    recover_pair,
    satisfies_double_star,
    validate_quotient_shape,
)
from .kirchberg import (
    ExtData,
    Half,
    HierarchyClass,
    KTriple,
    RealizationFailure,
    chi,
    ck_ext_range_check,
    ext_data,
    ext_total,
    ext_triple_range_check,
    hierarchy_class,
    iso_by_ext_triple,
    iso_by_mixed,
    iso_by_total_ext,
    iso_triple,
    mapping_cone_kgroups,
    reciprocal_dual,
    spanier_whitehead_dual_kgroups,
    w_of,
)
from .cuntz_krieger import (
    CKMatrix,
    a_hat,
    all_ones,
    ext_strong1_matrix,
    ext_weak1_matrix,
    iso_ck,
    k_triple,
    total_ext1_matrix,
    validate,
)

__all__ = [
    "__version__",
    "IntMatrix",
    "SnfResult",
    "cokernel",
    "kernel_rank",
    "smith_normal_form",
    "FgAbelianGroup",
    "GroupPresentation",
    "PointedGroup",
    "canonicalize",
    "direct_sum",
    "element_order",
    "is_isomorphic",
    "pointed_isomorphic",
    "quotient_by_element",
    "w_invariant",
    "ExponentMultiset",
    "NotRecoverable",
    "PrimaryDecomposition",
    "exists_quotient_element",
    "multiset_intersection",
    "odd_multiplicity_set",
    "primary_decomposition",
    "recover_pair",
    "satisfies_double_star",
    "validate_quotient_shape",
    "ExtData",
    "Half",
    "HierarchyClass",
    "KTriple",
    "RealizationFailure",
    "chi",
    "ck_ext_range_check",
    "ext_data",
    "ext_total",
    "ext_triple_range_check",
    "hierarchy_class",
    "iso_by_ext_triple",
    "iso_by_mixed",
    "iso_by_total_ext",
    "iso_triple",
    "mapping_cone_kgroups",
    "reciprocal_dual",
    "spanier_whitehead_dual_kgroups",
    "w_of",
    "CKMatrix",
    "a_hat",
    "all_ones",
    "ext_strong1_matrix",
    "ext_weak1_matrix",
    "iso_ck",
    "k_triple",
    "total_ext1_matrix",
    "validate",
]
