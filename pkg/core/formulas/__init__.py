"""Closed-form super-dimension formulas: multipliers, coranks, exterior squares."""

from .multiplier import (
    SOURCES,
    MultiplierDim,
    graded_tensor_dim,
    multiplier_abelian,
    multiplier_bound,
    multiplier_direct_sum,
    multiplier_heisenberg_even,
    multiplier_heisenberg_odd,
)
from .corank import Corank, corank, corank_direct_sum, corank_heisenberg
from .exterior import exterior_square_dim, exterior_square_direct_sum_dim

__all__ = [
    "SOURCES",
    "MultiplierDim",
    "graded_tensor_dim",
    "multiplier_abelian",
    "multiplier_bound",
    "multiplier_direct_sum",
    "multiplier_heisenberg_even",
    "multiplier_heisenberg_odd",
    "Corank",
    "corank",
    "corank_direct_sum",
    "corank_heisenberg",
    "exterior_square_dim",
    "exterior_square_direct_sum_dim",
]
