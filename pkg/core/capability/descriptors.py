"""
core.capability.descriptors
---------------------------

Result types of recognition and of the capability decision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Union

from core.algebra.subspace import GradedSubspace
from core.algebra.superspace import ZERO, SuperDim
from core.catalog.families import Abelian, FamilyTag, HeisenbergEven, HeisenbergOdd, direct_sum_tag
from core.errors import ContractViolation, PreconditionError


def _with_abelian(head: str, r: int, s: int) -> str:
    return head if r + s == 0 else f"{head}+A({r}|{s})"


@dataclass(frozen=True)
class AbelianFamily:
    m: int
    n: int
    kind = "abelian"

    @property
    def superdim(self) -> SuperDim:
        return SuperDim(self.m, self.n)

    @property
    def derived_dim(self) -> SuperDim:
        return ZERO

    def label(self) -> str:
        return f"A({self.m}|{self.n})"

    def tag(self) -> FamilyTag:
        return Abelian(self.m, self.n)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "label": self.label(), "params": {"m": self.m, "n": self.n}}


@dataclass(frozen=True)
class EvenHeisenbergPlusAbelian:
    """H(m,n) ⊕ A(r|s)."""

    m: int
    n: int
    r: int = 0
    s: int = 0
    kind = "even_heisenberg"

    @property
    def superdim(self) -> SuperDim:
        return SuperDim(2 * self.m + 1 + self.r, self.n + self.s)

    @property
    def derived_dim(self) -> SuperDim:
        return SuperDim(1, 0)

    @property
    def heisenberg_abelianization(self) -> SuperDim:
        return SuperDim(2 * self.m, self.n)

    def label(self) -> str:
        return _with_abelian(f"H({self.m},{self.n})", self.r, self.s)

    def tag(self) -> FamilyTag:
        head = HeisenbergEven(self.m, self.n)
        return head if self.r + self.s == 0 else direct_sum_tag(head, Abelian(self.r, self.s))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "label": self.label(),
            "params": {"m": self.m, "n": self.n, "r": self.r, "s": self.s},
        }


@dataclass(frozen=True)
class OddHeisenbergPlusAbelian:
    """H_m ⊕ A(r|s)."""

    m: int
    r: int = 0
    s: int = 0
    kind = "odd_heisenberg"

    @property
    def superdim(self) -> SuperDim:
        return SuperDim(self.m + self.r, self.m + 1 + self.s)

    @property
    def derived_dim(self) -> SuperDim:
        return SuperDim(0, 1)

    @property
    def heisenberg_abelianization(self) -> SuperDim:
        return SuperDim(self.m, self.m)

    def label(self) -> str:
        return _with_abelian(f"H_{self.m}", self.r, self.s)

    def tag(self) -> FamilyTag:
        head = HeisenbergOdd(self.m)
        return head if self.r + self.s == 0 else direct_sum_tag(head, Abelian(self.r, self.s))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "label": self.label(), "params": {"m": self.m, "r": self.r, "s": self.s}}


@dataclass(frozen=True)
class Unrecognized:
    reason: str
    kind = "unrecognized"

    def label(self) -> str:
        return f"unrecognized ({self.reason})"

    def tag(self) -> FamilyTag:
        raise PreconditionError(f"no catalog tag for an unrecognized algebra: {self.reason}")

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "label": self.label(), "params": {"reason": self.reason}}


FamilyDescriptor = Union[AbelianFamily, EvenHeisenbergPlusAbelian, OddHeisenbergPlusAbelian, Unrecognized]


class CapabilityStatus(str, Enum):
    CAPABLE = "capable"
    NOT_CAPABLE = "not_capable"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class CapabilityVerdict:
    status: CapabilityStatus
    justification: str
    epicenter_dim: Optional[SuperDim] = None
    note: Optional[str] = None
    descriptor: Optional[FamilyDescriptor] = None
    epicenter: Optional[GradedSubspace] = field(default=None, compare=False)
    table_status: Optional[CapabilityStatus] = None
    agrees: Optional[bool] = None

    def __post_init__(self):
        if self.status == CapabilityStatus.CAPABLE and self.epicenter_dim != ZERO:
            raise ContractViolation(f"a capable verdict needs a zero epicenter, got {self.epicenter_dim}")

    @property
    def capable(self) -> Optional[bool]:
        if self.status == CapabilityStatus.UNDECIDED:
            return None
        return self.status == CapabilityStatus.CAPABLE

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "status": self.status.value,
            "justification": self.justification,
            "epicenter_dim": None if self.epicenter_dim is None else str(self.epicenter_dim),
        }
        if self.note:
            out["note"] = self.note
        if self.descriptor is not None:
            out["descriptor"] = self.descriptor.to_dict()
        if self.epicenter is not None:
            out["epicenter"] = self.epicenter.to_dict()
        if self.table_status is not None:
            out["table_status"] = self.table_status.value
            out["agrees"] = self.agrees
        return out


__all__ = [
    "AbelianFamily",
    "EvenHeisenbergPlusAbelian",
    "OddHeisenbergPlusAbelian",
    "Unrecognized",
    "FamilyDescriptor",
    "CapabilityStatus",
    "CapabilityVerdict",
]
