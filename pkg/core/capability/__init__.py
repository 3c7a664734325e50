"""Recognition of ``dim L' <= 1`` algebras, their formula values and capability."""

from .descriptors import (
    AbelianFamily,
    CapabilityStatus,
    CapabilityVerdict,
    EvenHeisenbergPlusAbelian,
    FamilyDescriptor,
    OddHeisenbergPlusAbelian,
    Unrecognized,
)
from .recognition import recognize
from .predictions import predicted_corank, predicted_exterior_square, predicted_multiplier
from .decision import is_capable, is_capable_checked, noncapability_by_central_quotient
from .corank_table import (
    MAX_TABLE_CORANK,
    CorankTableEntry,
    capable_algebra_of_corank,
    capable_tag_of_corank,
    corank_table,
)

__all__ = [
    "AbelianFamily",
    "CapabilityStatus",
    "CapabilityVerdict",
    "EvenHeisenbergPlusAbelian",
    "FamilyDescriptor",
    "OddHeisenbergPlusAbelian",
    "Unrecognized",
    "recognize",
    "predicted_corank",
    "predicted_exterior_square",
    "predicted_multiplier",
    "is_capable",
    "is_capable_checked",
    "noncapability_by_central_quotient",
    "MAX_TABLE_CORANK",
    "CorankTableEntry",
    "capable_algebra_of_corank",
    "capable_tag_of_corank",
    "corank_table",
]
