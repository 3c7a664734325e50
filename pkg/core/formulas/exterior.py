from __future__ import annotations

from core.algebra.superspace import SuperDim
from core.formulas.multiplier import graded_tensor_dim


def exterior_square_dim(mult: SuperDim, derived: SuperDim) -> SuperDim:
    """``L∧L`` is an extension of ``L'`` by ``M(L)``."""
    return mult + derived


def exterior_square_direct_sum_dim(ext_h: SuperDim, ext_k: SuperDim, ab_h: SuperDim, ab_k: SuperDim) -> SuperDim:
    return ext_h + ext_k + graded_tensor_dim(ab_h, ab_k)


__all__ = ["exterior_square_dim", "exterior_square_direct_sum_dim"]
