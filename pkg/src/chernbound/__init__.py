"""Universal Chern-number bound polynomials over exact rationals.

For an n-dimensional complex projective manifold X with an ample line
bundle L, every monomial Chern number c_lambda * L^{n-|lambda|} is
squeezed between universal linear forms in the mixed degrees
K^t * L^{n-t}, and after homogenization between polynomials in just
x = L^n and y = K * L^{n-1}.  This package constructs those bound
polynomials with exact rational arithmetic and verifies all of the
inequalities on a catalog of concrete varieties through an exact
intersection-number oracle.
"""

from .bounds import (
    BoundPair,
    LinearBoundForm,
    QBounds,
    build_P_pm,
    build_Q,
    build_R_pm,
    chern_ratio_bound,
    chern_ratio_witness,
    ratio_bound_table,
    uniform_bound,
)
from .chern import (
    ChernExpr,
    ChernMonomial,
    ConsistencyError,
    DegenerateConstantError,
    expand_twisted_monomial,
    fujita_constant,
    twist_chern_class,
)
from .partitions import (
    Partition,
    all_partitions_up_to,
    check_partition,
    enumerate_partitions,
    format_partition,
    parse_partition,
    partition_count,
    partition_distance,
)
from .polynomial import MultiPoly
from .todd import (
    HilbertData,
    describe_tail_margin,
    hilbert_coefficients,
    rr_tail_bound,
    todd_coefficients,
    todd_component,
)
from .varieties import (
    GradedRing,
    IntegrityError,
    IntersectionVector,
    VarietySpec,
    abelian_variety,
    check_log_concavity,
    check_nef_chain,
    complete_intersection,
    default_catalog,
    euler_characteristic_oracle,
    hypersurface,
    intersection_vector,
    load_catalog,
    product_of_projective_spaces,
    projective_space,
    save_catalog,
    tabulated,
)
from .verify import run_verification, verify_variety

__version__ = "0.1.0"

__all__ = [
    "BoundPair",
    "ChernExpr",
    "ChernMonomial",
    "ConsistencyError",
    "DegenerateConstantError",
    "GradedRing",
    "HilbertData",
    "IntegrityError",
    "IntersectionVector",
    "LinearBoundForm",
    "MultiPoly",
    "Partition",
    "QBounds",
    "VarietySpec",
    "abelian_variety",
    "all_partitions_up_to",
    "build_P_pm",
    "build_Q",
    "build_R_pm",
    "check_log_concavity",
    "check_nef_chain",
    "check_partition",
    "chern_ratio_bound",
    "chern_ratio_witness",
    "complete_intersection",
    "default_catalog",
    "describe_tail_margin",
    "enumerate_partitions",
    "euler_characteristic_oracle",
    "expand_twisted_monomial",
    "format_partition",
    "fujita_constant",
    "hilbert_coefficients",
    "hypersurface",
    "intersection_vector",
    "load_catalog",
    "parse_partition",
    "partition_count",
    "partition_distance",
    "product_of_projective_spaces",
    "projective_space",
    "ratio_bound_table",
    "rr_tail_bound",
    "run_verification",
    "save_catalog",
    "tabulated",
    "todd_coefficients",
    "todd_component",
    "twist_chern_class",
    "uniform_bound",
    "verify_variety",
]
