"""
core.capability.decision
------------------------

Capability of nilpotent Lie superalgebras with ``dim L' <= 1``.

``is_capable`` reads the verdict off the recognized parameters.
``is_capable_checked`` computes the epicenter with the Hopf-formula oracle
and compares it with the table. ``noncapability_by_central_quotient`` is
the ``dim L/Z(L) > 2`` criterion for ``dim L' = 1``.
"""

from __future__ import annotations

import logging
from typing import Optional

from core import citations
from core.algebra.lie import LieSuperalgebra
from core.algebra.structure import center, derived_subalgebra, is_nilpotent, require_valid
from core.algebra.subspace import GradedSubspace
from core.algebra.superspace import ZERO, SuperDim
from core.capability.descriptors import (
    AbelianFamily,
    CapabilityStatus,
    CapabilityVerdict,
    EvenHeisenbergPlusAbelian,
    OddHeisenbergPlusAbelian,
)
from core.capability.recognition import recognize
from core.errors import OracleLimitError, PreconditionError
from core.oracle import OracleLimits, epicenter_oracle, presentation_of

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

CAPABLE = CapabilityStatus.CAPABLE
NOT_CAPABLE = CapabilityStatus.NOT_CAPABLE
UNDECIDED = CapabilityStatus.UNDECIDED


def is_capable(L: LieSuperalgebra) -> CapabilityVerdict:
    descriptor = recognize(L)
    if isinstance(descriptor, AbelianFamily):
        m, n = descriptor.m, descriptor.n
        if (m, n) == (1, 0):
            return CapabilityVerdict(
                NOT_CAPABLE,
                citations.ABELIAN_CAPABILITY,
                SuperDim(1, 0),
                note="epicenter is the whole algebra",
                descriptor=descriptor,
                epicenter=GradedSubspace.full(L.parities),
            )
        return CapabilityVerdict(CAPABLE, citations.ABELIAN_CAPABILITY, ZERO, descriptor=descriptor)

    if isinstance(descriptor, EvenHeisenbergPlusAbelian):
        justification = citations.EVEN_HEISENBERG_CAPABILITY
        capable = (descriptor.m, descriptor.n) == (1, 0)
    elif isinstance(descriptor, OddHeisenbergPlusAbelian):
        justification = citations.ODD_HEISENBERG_CAPABILITY
        capable = descriptor.m == 1
    else:
        return CapabilityVerdict(
            UNDECIDED,
            citations.UNRECOGNIZED,
            note=f"{descriptor.reason}; run the oracle check",
            descriptor=descriptor,
        )

    if capable:
        return CapabilityVerdict(CAPABLE, justification, ZERO, descriptor=descriptor)
    if descriptor.r + descriptor.s == 0:
        # Z*(L) is a non-zero part of Z(L) = L', which is one-dimensional
        return CapabilityVerdict(
            NOT_CAPABLE,
            justification,
            descriptor.derived_dim,
            note="epicenter equals the derived subalgebra",
            descriptor=descriptor,
            epicenter=derived_subalgebra(L),
        )
    return CapabilityVerdict(
        NOT_CAPABLE,
        justification,
        note="epicenter is non-zero; the exact ideal is left to the oracle",
        descriptor=descriptor,
    )


def noncapability_by_central_quotient(L: LieSuperalgebra) -> Optional[CapabilityVerdict]:
    """Not capable when ``dim L' = 1`` and ``dim L/Z(L) > 2``; ``None`` when the criterion is silent."""
    require_valid(L)
    if not is_nilpotent(L):
        raise PreconditionError(f"{L.name} is not nilpotent")
    derived = derived_subalgebra(L).dim
    if derived != 1:
        raise PreconditionError(f"the central quotient criterion needs dim L' = 1, {L.name} has {derived}")
    quotient = L.superdim - center(L).superdim
    if quotient.total <= 2:
        return None
    return CapabilityVerdict(
        NOT_CAPABLE,
        citations.CENTRAL_QUOTIENT_CRITERION,
        note=f"dim L/Z(L) = {quotient.total} > 2",
        descriptor=recognize(L),
    )


def is_capable_checked(
    L: LieSuperalgebra,
    class_bound: Optional[int] = None,
    verify_stability: Optional[bool] = None,
    limits: Optional[OracleLimits] = None,
    max_dim: Optional[int] = None,
) -> CapabilityVerdict:
    """Decide capability from the epicenter computed by the Hopf-formula oracle."""
    require_valid(L)
    limits = limits or OracleLimits.from_config()
    ceiling = limits.max_total_dim if max_dim is None else max_dim
    if L.dim > ceiling:
        raise OracleLimitError(f"dimension {L.dim} of {L.name} exceeds the oracle limit of {ceiling}")
    if not is_nilpotent(L):
        raise PreconditionError(f"{L.name} is not nilpotent")

    presentation = presentation_of(L, class_bound, minimal=True, limits=limits)
    result = epicenter_oracle(presentation, verify_stability=verify_stability, limits=limits)
    status = CAPABLE if result.superdim == ZERO else NOT_CAPABLE
    table = is_capable(L)
    agrees = None if table.status == UNDECIDED else table.status == status
    if agrees is False:
        logger.warning("%s: oracle says %s, decision table says %s", L.name, status.value, table.status.value)
    return CapabilityVerdict(
        status,
        citations.HOPF_ORACLE,
        result.superdim,
        note=f"class bound {result.class_bound}",
        descriptor=table.descriptor,
        epicenter=result.ideal,
        table_status=table.status,
        agrees=agrees,
    )


__all__ = ["is_capable", "is_capable_checked", "noncapability_by_central_quotient"]
