"""
core.capability.predictions
---------------------------

Formula values for recognized algebras. Descriptors carry parameters; the
formulas package takes parameters. This module connects the two.
"""

from __future__ import annotations

from core import citations
from core.algebra.superspace import SuperDim
from core.capability.descriptors import (
    AbelianFamily,
    EvenHeisenbergPlusAbelian,
    FamilyDescriptor,
    OddHeisenbergPlusAbelian,
)
from core.errors import PreconditionError
from core.formulas import (
    Corank,
    MultiplierDim,
    corank,
    exterior_square_dim,
    multiplier_abelian,
    multiplier_direct_sum,
    multiplier_heisenberg_even,
    multiplier_heisenberg_odd,
)


def predicted_multiplier(descriptor: FamilyDescriptor) -> MultiplierDim:
    if isinstance(descriptor, AbelianFamily):
        return MultiplierDim(multiplier_abelian(descriptor.m, descriptor.n), citations.ABELIAN_MULTIPLIER)
    if isinstance(descriptor, EvenHeisenbergPlusAbelian):
        head = multiplier_heisenberg_even(descriptor.m, descriptor.n)
        source = citations.EVEN_HEISENBERG_MULTIPLIER
    elif isinstance(descriptor, OddHeisenbergPlusAbelian):
        head = multiplier_heisenberg_odd(descriptor.m)
        source = citations.ODD_HEISENBERG_MULTIPLIER
    else:
        raise PreconditionError(f"no multiplier formula for {descriptor.label()}")
    r, s = descriptor.r, descriptor.s
    if r + s == 0:
        return MultiplierDim(head, source)
    value = multiplier_direct_sum(
        head,
        multiplier_abelian(r, s),
        descriptor.heisenberg_abelianization,
        SuperDim(r, s),
    )
    return MultiplierDim(value, citations.DIRECT_SUM_MULTIPLIER)


def predicted_exterior_square(descriptor: FamilyDescriptor) -> MultiplierDim:
    mult = predicted_multiplier(descriptor)
    return MultiplierDim(exterior_square_dim(mult.value, descriptor.derived_dim), citations.EXTERIOR_SQUARE_EXTENSION)


def predicted_corank(descriptor: FamilyDescriptor) -> Corank:
    return corank(descriptor.superdim, predicted_multiplier(descriptor).value)


__all__ = ["predicted_multiplier", "predicted_exterior_square", "predicted_corank"]
