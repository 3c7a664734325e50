"""Exact Lie superalgebra kernel: spaces, structure constants and constructions."""

from .superspace import Parity, SuperDim, Scalar, ZERO, koszul_sign
from .subspace import GradedSubspace, vector_parity, homogeneous_parts
from .lie import LieSuperalgebra
from .structure import (
    ValidationReport,
    Violation,
    bracket,
    center,
    change_basis,
    derived_subalgebra,
    direct_sum,
    is_graded_ideal,
    is_nilpotent,
    jacobi_residual,
    lower_central_series,
    nilpotency_class,
    quotient,
    require_valid,
    summand_maps,
    superdim,
    validate,
)
from .interchange import dumps_algebra, loads_algebra, read_algebra, write_algebra

__all__ = [
    "Parity",
    "SuperDim",
    "Scalar",
    "ZERO",
    "koszul_sign",
    "GradedSubspace",
    "vector_parity",
    "homogeneous_parts",
    "LieSuperalgebra",
    "ValidationReport",
    "Violation",
    "bracket",
    "center",
    "change_basis",
    "derived_subalgebra",
    "direct_sum",
    "is_graded_ideal",
    "is_nilpotent",
    "jacobi_residual",
    "lower_central_series",
    "nilpotency_class",
    "quotient",
    "require_valid",
    "summand_maps",
    "superdim",
    "validate",
    "dumps_algebra",
    "loads_algebra",
    "read_algebra",
    "write_algebra",
]
