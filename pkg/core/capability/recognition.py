"""
core.capability.recognition
---------------------------

Recognize nilpotent Lie superalgebras with ``dim L' <= 1``.

When ``L' = span{z}`` is one-dimensional, ``[u, v] = B(u, v) z`` defines a
bilinear form on ``L`` whose radical is the center. The ranks of its parity
blocks on a complement of ``Z(L)`` give the Heisenberg parameters; the rest
of the center is the abelian summand. Only parameters are produced, no
explicit isomorphism.
"""

from __future__ import annotations

import logging
from typing import List

from core.algebra.lie import LieSuperalgebra
from core.algebra.structure import center, derived_subalgebra, nilpotency_class, require_valid
from core.algebra.superspace import Parity
from core.capability.descriptors import (
    AbelianFamily,
    EvenHeisenbergPlusAbelian,
    FamilyDescriptor,
    OddHeisenbergPlusAbelian,
    Unrecognized,
)
from core.errors import ConsistencyError
from utils.linalg import Vector, rank

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def _block_rank(L: LieSuperalgebra, rows: List[int], cols: List[int], pivot: int) -> int:
    position = {j: c for c, j in enumerate(cols)}
    matrix: List[Vector] = []
    for i in rows:
        row = {}
        for j in cols:
            c = L.basis_bracket(i, j).get(pivot)
            if c:
                row[position[j]] = c
        matrix.append(row)
    return rank(matrix, len(cols))


def recognize(L: LieSuperalgebra) -> FamilyDescriptor:
    require_valid(L)
    if nilpotency_class(L) is None:
        return Unrecognized("not nilpotent")
    derived = derived_subalgebra(L)
    if derived.dim == 0:
        return AbelianFamily(L.superdim.even, L.superdim.odd)
    if derived.dim >= 2:
        return Unrecognized("dim L' >= 2")

    # rref row: coefficient of [u, v] at the pivot is B(u, v)
    pivot = derived.pivots[0]
    z_parity = L.parity(pivot)
    z_center = center(L)
    complement = z_center.complement_indices()
    evens = [i for i in complement if L.parity(i) == Parity.EVEN]
    odds = [i for i in complement if L.parity(i) == Parity.ODD]
    rest = z_center.superdim - derived.superdim

    if z_parity == Parity.EVEN:
        twice_m = _block_rank(L, evens, evens, pivot)
        if twice_m % 2:
            raise ConsistencyError(f"skew block of odd rank {twice_m} in {L.name}")
        n = _block_rank(L, odds, odds, pivot)
        descriptor: FamilyDescriptor = EvenHeisenbergPlusAbelian(twice_m // 2, n, rest.even, rest.odd)
    else:
        m = _block_rank(L, evens, odds, pivot)
        descriptor = OddHeisenbergPlusAbelian(m, rest.even, rest.odd)

    if descriptor.superdim != L.superdim:
        raise ConsistencyError(f"{descriptor.label()} has superdim {descriptor.superdim}, {L.name} has {L.superdim}")
    logger.debug("%s recognized as %s", L.name, descriptor.label())
    return descriptor


__all__ = ["recognize"]
