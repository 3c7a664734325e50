"""
core.formulas.multiplier
------------------------

Closed-form super-dimensions of the Schur multiplier. All functions take
integer parameters or ``SuperDim`` values, never algebras; the capability
package maps recognized algebras to parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict

from core import citations
from core.algebra.superspace import SuperDim
from core.errors import InputError


@dataclass(frozen=True)
class MultiplierDim:
    value: SuperDim
    source: str

    def to_dict(self) -> Dict[str, Any]:
        return {"value": str(self.value), "source": self.source}


def _nonnegative(*values: int) -> None:
    if any(v < 0 for v in values):
        raise InputError(f"parameters must be non-negative, got {values}")


def multiplier_bound(m: int, n: int) -> int:
    """Upper bound ``((m+n)^2 + (n-m)) / 2`` on the multiplier of any superalgebra of superdim (m|n)."""
    _nonnegative(m, n)
    # (m+n)^2 and n-m have the same parity
    return ((m + n) ** 2 + (n - m)) // 2


def multiplier_abelian(m: int, n: int) -> SuperDim:
    _nonnegative(m, n)
    return SuperDim((m * m + n * n + n - m) // 2, m * n)


def multiplier_heisenberg_even(m: int, n: int) -> SuperDim:
    _nonnegative(m, n)
    if m + n < 1:
        raise InputError("H(m,n) needs m + n >= 1")
    if (m, n) == (1, 0):
        return SuperDim(2, 0)
    if (m, n) == (0, 1):
        return SuperDim(0, 0)
    return SuperDim(2 * m * m - m + n * (n + 1) // 2 - 1, 2 * m * n)


def multiplier_heisenberg_odd(m: int) -> SuperDim:
    _nonnegative(m)
    if m < 1:
        raise InputError("H_m needs m >= 1")
    if m == 1:
        return SuperDim(1, 1)
    return SuperDim(m * m, m * m - 1)


def graded_tensor_dim(a: SuperDim, b: SuperDim) -> SuperDim:
    """Super-dimension of ``A ⊗ B`` with parities adding."""
    return SuperDim(a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even)


def multiplier_direct_sum(m_h: SuperDim, m_k: SuperDim, ab_h: SuperDim, ab_k: SuperDim) -> SuperDim:
    """``M(H) + M(K) + H/H' ⊗ K/K'`` at the level of super-dimensions."""
    return m_h + m_k + graded_tensor_dim(ab_h, ab_k)


SOURCES = {
    "bound": citations.MULTIPLIER_BOUND,
    "abelian": citations.ABELIAN_MULTIPLIER,
    "heisenberg_even": citations.EVEN_HEISENBERG_MULTIPLIER,
    "heisenberg_odd": citations.ODD_HEISENBERG_MULTIPLIER,
    "direct_sum": citations.DIRECT_SUM_MULTIPLIER,
}


__all__ = [
    "MultiplierDim",
    "multiplier_bound",
    "multiplier_abelian",
    "multiplier_heisenberg_even",
    "multiplier_heisenberg_odd",
    "graded_tensor_dim",
    "multiplier_direct_sum",
    "SOURCES",
]
