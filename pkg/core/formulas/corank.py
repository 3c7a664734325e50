"""Corank: how far the multiplier falls short of the universal bound."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from core.algebra.superspace import SuperDim
from core.catalog.families import HeisenbergEven, HeisenbergOdd
from core.errors import ContractViolation, InputError
from core.formulas.multiplier import graded_tensor_dim, multiplier_bound


@dataclass(frozen=True)
class Corank:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ContractViolation(f"negative corank {self.value}")

    def __int__(self) -> int:
        return self.value


def corank(dim: SuperDim, mult: SuperDim) -> Corank:
    bound = multiplier_bound(dim.even, dim.odd)
    if mult.total > bound:
        raise ContractViolation(f"multiplier {mult} exceeds the bound {bound} for superdim {dim}")
    return Corank(bound - mult.total)


def corank_heisenberg(tag: Union[HeisenbergEven, HeisenbergOdd]) -> int:
    """``2m+n+1`` for H(m,n) with m+n >= 2; ``2m+2`` for H_m with m >= 2."""
    if isinstance(tag, HeisenbergEven):
        if tag.m + tag.n < 2:
            raise InputError(f"closed form needs m + n >= 2, got {tag.label()}")
        return 2 * tag.m + tag.n + 1
    if isinstance(tag, HeisenbergOdd):
        if tag.m < 2:
            raise InputError(f"closed form needs m >= 2, got {tag.label()}")
        return 2 * tag.m + 2
    raise InputError(f"not a Heisenberg tag: {tag!r}")


def corank_direct_sum(t_l: int, t_k: int, dim_l: SuperDim, dim_k: SuperDim, ab_l: SuperDim, ab_k: SuperDim) -> int:
    value = t_l + t_k + dim_l.total * dim_k.total - graded_tensor_dim(ab_l, ab_k).total
    if value < 0:
        raise ContractViolation(f"negative corank {value} from direct-sum inputs")
    return value


__all__ = ["Corank", "corank", "corank_heisenberg", "corank_direct_sum"]
