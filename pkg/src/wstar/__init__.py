"""Operator-space filtrations, spin codes, and distance enumerators.

The package builds W*-filtrations (graded operator subspaces closed
under adjoints and products), constructs detection codes on irreducible
spin representations from rational partitions of moment-curve points,
and ties code structure to A/B weight enumerators through an exact 6j
transform with an LP feasibility bound on top.
"""

from .bounds import BoundReport, LPInstance, build_lp, feasible, max_k
from .codes import (
    CapacityError,
    Code,
    DetectionReport,
    NotCorrectableError,
    RecoveryChannel,
    RecoveryReport,
    build_code,
    build_recovery,
    decode,
    select_weights,
    verify_detection,
    verify_recovery,
)
from .enumerators import (
    RainsReport,
    SixJ,
    WeightTable,
    cg_coefficients,
    classical_distribution,
    distance_distribution,
    macwilliams_check,
    rains_check,
    sixj,
    transform_matrix,
    weight_A,
    weight_B,
    weight_table,
)
from .filtration import (
    AxiomReport,
    FiniteMetric,
    Filtration,
    classical_filtration,
    hamming_filtration,
    metric_from_filtration,
    path_metric,
    pure_terms,
    random_metric,
    su2_filtration,
    verify_axioms,
)
from .matcore import (
    DEFAULT_TOL,
    ShapeError,
    SubspaceBasis,
    adjoint,
    hs_inner,
    hs_norm,
    max_principal_angle,
    membership_residual,
    orthonormalize,
    product_span,
)
from .randmat import random_hermitian, random_positive, random_projection, random_state
from .su2rep import Irrep, TensorOpBasis, ad_weight_decompose, build_irrep, c_minus, c_plus, casimir, tensor_op_basis
from .tverberg import TverbergPartition, base_partition, construct, lift, moment_curve, transport
from .tverberg import verify as verify_partition

__all__ = [
    "AxiomReport", "BoundReport", "CapacityError", "Code", "DEFAULT_TOL",
    "DetectionReport", "FiniteMetric", "Filtration", "Irrep", "LPInstance",
    "NotCorrectableError", "RainsReport", "RecoveryChannel", "RecoveryReport",
    "ShapeError", "SixJ", "SubspaceBasis", "TensorOpBasis", "TverbergPartition",
    "WeightTable", "ad_weight_decompose", "adjoint", "base_partition",
    "build_code", "build_irrep", "build_lp", "build_recovery", "c_minus",
    "c_plus", "casimir", "cg_coefficients", "classical_distribution",
    "classical_filtration", "construct", "decode", "distance_distribution",
    "feasible", "hamming_filtration", "hs_inner", "hs_norm", "lift",
    "macwilliams_check", "max_k", "max_principal_angle", "membership_residual",
    "metric_from_filtration", "moment_curve", "orthonormalize", "path_metric",
    "product_span", "pure_terms", "rains_check", "random_hermitian",
    "random_metric", "random_positive", "random_projection", "random_state",
    "select_weights", "sixj", "su2_filtration", "tensor_op_basis", "transform_matrix",
    "transport", "verify_axioms", "verify_detection", "verify_partition",
    "verify_recovery", "weight_A", "weight_B", "weight_table",
]

__version__ = "0.1.0"
