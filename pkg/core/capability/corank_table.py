"""
core.capability.corank_table
----------------------------

Nilpotent Lie superalgebras with ``dim L' = 1`` by corank, for coranks up
to four, and a capable algebra of any given corank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from core.algebra.lie import LieSuperalgebra
from core.catalog import Abelian, FamilyTag, HeisenbergEven, construct, direct_sum_tag, parse_tag
from core.errors import InputError, PreconditionError

MAX_TABLE_CORANK = 4


@dataclass(frozen=True)
class CorankTableEntry:
    label: str
    tag: Optional[FamilyTag] = None
    parametric: bool = False
    constructible: bool = True
    known_divergent: bool = False
    published: bool = True
    note: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "label": self.label,
            "parametric": self.parametric,
            "constructible": self.constructible,
            "known_divergent": self.known_divergent,
            "published": self.published,
        }
        if self.note:
            out["note"] = self.note
        return out


def _entry(label: str, **kwargs: Any) -> CorankTableEntry:
    return CorankTableEntry(label, tag=parse_tag(label), **kwargs)


def _opaque(label: str) -> CorankTableEntry:
    return CorankTableEntry(label, constructible=False, note="named without a definition; not constructible here")


def _missing(label: str) -> CorankTableEntry:
    # absent from the published lists although its corank is in range
    return _entry(label, known_divergent=True, published=False, note="missing from the published list")


_TABLE: Dict[int, List[CorankTableEntry]] = {
    0: [CorankTableEntry("A(m|n)", parametric=True, note="every abelian algebra")],
    1: [_entry("H(1,0)")],
    2: [_entry("H(1,0)+A(1|0)"), _entry("H(0,1)"), _missing("H(1,0)+A(0|1)")],
    3: [
        _entry("H(1,0)+A(2|0)"),
        _entry("H(0,1)+A(1|0)"),
        _entry("H(0,2)"),
        _entry("H_1"),
        _entry("H(0,1)+A(0|1)"),
        _missing("H(1,0)+A(1|1)"),
        _missing("H(1,0)+A(0|2)"),
    ],
    4: [
        _entry("H(1,0)+A(3|0)"),
        _opaque("L_{5,0}"),
        _opaque("L_{4,0}"),
        _entry("H(0,3)"),
        _entry("H_1+A(1|0)"),
        _entry("H(0,1)+A(1|1)"),
        _entry("H(0,1)+A(0|2)"),
        _entry("H(0,1)+A(2|0)"),
        _entry("H_1+A(0|1)"),
        _entry(
            "H_1+A(2|0)",
            known_divergent=True,
            note="listed at corank 4; the direct-sum formula and the oracle give 5",
        ),
        _missing("H(1,1)"),
        _missing("H(1,0)+A(2|1)"),
        _missing("H(1,0)+A(1|2)"),
        _missing("H(1,0)+A(0|3)"),
        _missing("H(0,2)+A(1|0)"),
        _missing("H(0,2)+A(0|1)"),
    ],
}


def corank_table(k: int) -> List[CorankTableEntry]:
    if k < 0:
        raise InputError(f"corank must be non-negative, got {k}")
    if k > MAX_TABLE_CORANK:
        raise PreconditionError(f"the corank table stops at {MAX_TABLE_CORANK}, got {k}")
    return list(_TABLE[k])


def capable_tag_of_corank(k: int) -> FamilyTag:
    if k < 0:
        raise InputError(f"corank must be non-negative, got {k}")
    if k == 0:
        return Abelian(2, 0)
    if k == 1:
        return HeisenbergEven(1, 0)
    return direct_sum_tag(HeisenbergEven(1, 0), Abelian(k - 1, 0))


def capable_algebra_of_corank(k: int) -> LieSuperalgebra:
    """``A(2|0)``, ``H(1,0)`` or ``H(1,0) ⊕ A(k-1|0)``."""
    return construct(capable_tag_of_corank(k))


__all__ = [
    "CorankTableEntry",
    "MAX_TABLE_CORANK",
    "corank_table",
    "capable_tag_of_corank",
    "capable_algebra_of_corank",
]
