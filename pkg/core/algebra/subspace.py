"""
core.algebra.subspace
---------------------

Graded subspaces of a super vector space with a fixed homogeneous basis.

A ``GradedSubspace`` stores the reduced row echelon basis of its span, so two
subspaces are equal exactly when their stored bases are equal. Every stored
basis vector is homogeneous; its parity is the parity of its pivot.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

from core.algebra.superspace import Parity, SuperDim
from core.errors import InputError, NotGradedError
from utils.linalg import Echelon, Vector, VectorLike, as_vector, independent_columns

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def vector_parity(parities: Sequence[Parity], v: Mapping[int, Fraction]) -> Optional[Parity]:
    """Parity of a homogeneous vector, ``None`` for zero. Raises NotGradedError on mixed support."""
    found = {parities[k] for k, c in v.items() if c}
    if len(found) > 1:
        raise NotGradedError(f"vector {dict(v)} mixes even and odd coordinates")
    return found.pop() if found else None


def homogeneous_parts(parities: Sequence[Parity], v: Mapping[int, Fraction]) -> Tuple[Vector, Vector]:
    even = {k: c for k, c in v.items() if c and parities[k] == Parity.EVEN}
    odd = {k: c for k, c in v.items() if c and parities[k] == Parity.ODD}
    return even, odd


class GradedSubspace:
    def __init__(self, parities: Sequence[Parity], vectors: Iterable[VectorLike] = (), column_order: Optional[Sequence[int]] = None):
        self._parities: Tuple[Parity, ...] = tuple(Parity(p) for p in parities)
        n = len(self._parities)
        cleaned = []
        for v in vectors:
            v = as_vector(v)
            for k in v:
                if not 0 <= k < n:
                    raise InputError(f"coordinate {k} outside ambient dimension {n}")
            vector_parity(self._parities, v)
            cleaned.append(v)
        self._echelon = Echelon.span(cleaned, n, column_order=column_order)

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, parities: Sequence[Parity]) -> "GradedSubspace":
        return cls(parities)

    @classmethod
    def full(cls, parities: Sequence[Parity]) -> "GradedSubspace":
        return cls(parities, ({i: Fraction(1)} for i in range(len(parities))))

    @classmethod
    def spanned_by_indices(cls, parities: Sequence[Parity], indices: Iterable[int]) -> "GradedSubspace":
        return cls(parities, ({i: Fraction(1)} for i in indices))

    @classmethod
    def graded_hull(cls, parities: Sequence[Parity], vectors: Iterable[VectorLike]) -> "GradedSubspace":
        """Smallest graded subspace containing ``vectors``: the span of their homogeneous parts."""
        parts: List[Vector] = []
        for v in vectors:
            parts.extend(p for p in homogeneous_parts(parities, as_vector(v)) if p)
        return cls(parities, parts)

    # properties -------------------------------------------------------
    @property
    def parities(self) -> Tuple[Parity, ...]:
        return self._parities

    @property
    def ambient_dim(self) -> int:
        return len(self._parities)

    @property
    def basis(self) -> List[Vector]:
        return [dict(row) for row in self._echelon.rows]

    @property
    def pivots(self) -> List[int]:
        return list(self._echelon.pivots)

    @property
    def dim(self) -> int:
        return self._echelon.dim

    @property
    def superdim(self) -> SuperDim:
        odd = sum(1 for p in self._echelon.pivots if self._parities[p] == Parity.ODD)
        return SuperDim(self.dim - odd, odd)

    def basis_of_parity(self, parity: Parity) -> List[Vector]:
        return [dict(row) for row, p in zip(self._echelon.rows, self._echelon.pivots) if self._parities[p] == parity]

    # membership -------------------------------------------------------
    def reduce(self, v: Mapping[int, Fraction]) -> Vector:
        return self._echelon.reduce(v)

    def contains(self, v: VectorLike) -> bool:
        return self._echelon.contains(as_vector(v))

    __contains__ = contains

    def is_subspace_of(self, other: "GradedSubspace") -> bool:
        self._check_ambient(other)
        return all(other.contains(v) for v in self._echelon.rows)

    def complement_indices(self) -> List[int]:
        """Standard basis indices not used as pivots; their span is a graded complement."""
        used = set(self._echelon.pivots)
        return [i for i in range(self.ambient_dim) if i not in used]

    def independent_modulo(self, vectors: Sequence[Mapping[int, Fraction]]) -> List[int]:
        """Positions of a maximal subset of ``vectors`` independent modulo this subspace."""
        residues = [self.reduce(v) for v in vectors]
        chosen, _ = independent_columns(residues, self.ambient_dim)
        return chosen

    # operations -------------------------------------------------------
    def extended(self, vectors: Iterable[VectorLike]) -> "GradedSubspace":
        return GradedSubspace(self._parities, list(self._echelon.rows) + [as_vector(v) for v in vectors])

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        self._check_ambient(other)
        return self.extended(other._echelon.rows)

    def supported_on(self, indices: Iterable[int]) -> "GradedSubspace":
        """Intersection with the span of the standard vectors ``indices``."""
        allowed = set(indices)
        outside = [i for i in range(self.ambient_dim) if i not in allowed]
        order = outside + sorted(allowed)
        ordered = GradedSubspace(self._parities, self._echelon.rows, column_order=order)
        return GradedSubspace(
            self._parities,
            (row for row, p in zip(ordered._echelon.rows, ordered._echelon.pivots) if p in allowed),
        )

    def _check_ambient(self, other: "GradedSubspace") -> None:
        if other._parities != self._parities:
            raise InputError("subspaces live in different ambient spaces")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return (
            self._parities == other._parities
            and self._echelon.pivots == other._echelon.pivots
            and self._echelon.rows == other._echelon.rows
        )

    def __hash__(self) -> int:
        return hash((self._parities, tuple(self._echelon.pivots), tuple(tuple(sorted(r.items())) for r in self._echelon.rows)))

    def __repr__(self) -> str:
        return f"GradedSubspace(superdim={self.superdim}, ambient={self.ambient_dim})"

    def to_dict(self):
        return {
            "superdim": self.superdim.to_dict(),
            "basis": [{str(k): str(c) for k, c in sorted(row.items())} for row in self._echelon.rows],
        }


__all__ = ["GradedSubspace", "vector_parity", "homogeneous_parts"]
