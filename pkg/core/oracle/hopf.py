"""
core.oracle.hopf
----------------

Multiplier, exterior square and epicenter of a presented algebra computed
inside a truncated free algebra ``F`` with relation ideal ``R``::

    M(L)   = (F' ∩ R) / [F, R]
    L ∧ L  = F' / [F, R]
    Z*(L)  = image in F/R of the center of F/[F, R]

``[F, R]`` is spanned by ``[g, r]`` for generators ``g`` and a basis ``r`` of
``R``, and ``R`` is closed under ``ad`` of the generators only; both suffice
because ``F`` is generated by its degree-one part.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from core.algebra.subspace import GradedSubspace
from core.algebra.superspace import Parity, SuperDim
from core.errors import ClassBoundError, ConsistencyError
from core.oracle.free_nilpotent import TruncatedFreeAlgebra, truncated_free
from core.oracle.limits import OracleLimits, default_verify_stability
from core.oracle.presentation import FreePresentation
from utils.linalg import Vector, nullspace

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class OracleResult:
    quantity: str
    superdim: SuperDim
    representatives: Tuple[str, ...]
    class_bound: int
    ideal: Optional[GradedSubspace] = field(default=None, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "quantity": self.quantity,
            "superdim": str(self.superdim),
            "representatives": list(self.representatives),
            "class_bound": self.class_bound,
        }
        if self.ideal is not None:
            out["ideal"] = self.ideal.to_dict()
        return out


def ideal_closure(free: TruncatedFreeAlgebra, seeds: Iterable[Mapping[int, Fraction]]) -> GradedSubspace:
    """Smallest subspace containing ``seeds`` and closed under ``ad`` of every generator."""
    span = GradedSubspace(free.parities, seeds)
    frontier = span.basis
    rounds = 0
    while frontier:
        rounds += 1
        images = [free.ad(g, v) for g in range(free.generator_count) for v in frontier]
        residues = [r for r in (span.reduce(x) for x in images) if r]
        if not residues:
            break
        fresh = GradedSubspace(free.parities, residues)
        span = span + fresh
        frontier = fresh.basis
    logger.debug("ideal closure: superdim %s after %d rounds", span.superdim, rounds)
    return span


class HopfComputation:
    """The subspaces ``R``, ``[F, R]`` and ``F'`` of one presentation."""

    def __init__(self, presentation: FreePresentation, limits: Optional[OracleLimits] = None):
        self.presentation = presentation
        self.free = truncated_free(presentation.generators, presentation.class_bound, limits)
        parities = self.free.parities
        seeds = [self.free.evaluate(t) for t in presentation.relators]
        self.relations = ideal_closure(self.free, seeds)
        self._check_truncation()
        self.commutator = GradedSubspace(
            parities,
            (self.free.ad(g, r) for g in range(self.free.generator_count) for r in self.relations.basis),
        )
        self.derived = GradedSubspace.spanned_by_indices(parities, self.free.indices_of_degree(2))
        logger.debug(
            "F %s, R %s, [F,R] %s at class bound %d",
            self.free.superdim,
            self.relations.superdim,
            self.commutator.superdim,
            presentation.class_bound,
        )

    def _check_truncation(self) -> None:
        c = self.presentation.class_bound
        top = self.free.indices_of_degree(c, c)
        if any(not self.relations.contains({i: Fraction(1)}) for i in top):
            raise ClassBoundError(
                f"class bound {c} is too small: the presented algebra has nilpotency class at least {c}"
            )

    @property
    def class_bound(self) -> int:
        return self.presentation.class_bound

    @property
    def presented_superdim(self) -> SuperDim:
        return self.free.superdim - self.relations.superdim

    @cached_property
    def derived_relations(self) -> GradedSubspace:
        """``F' ∩ R``."""
        return self.relations.supported_on(self.free.indices_of_degree(2))

    def _representatives(self, space: GradedSubspace, modulo: GradedSubspace) -> Tuple[str, ...]:
        basis = space.basis
        chosen = modulo.independent_modulo(basis)
        return tuple(self.free.render(modulo.reduce(basis[k])) for k in chosen)

    def multiplier(self) -> OracleResult:
        space = self.derived_relations
        return OracleResult(
            "multiplier",
            space.superdim - self.commutator.superdim,
            self._representatives(space, self.commutator),
            self.class_bound,
        )

    def exterior_square(self) -> OracleResult:
        return OracleResult(
            "exterior_square",
            self.derived.superdim - self.commutator.superdim,
            self._representatives(self.derived, self.commutator),
            self.class_bound,
        )

    @cached_property
    def central_preimage(self) -> GradedSubspace:
        """``{u in F : [g, u] in [F, R] for every generator g}``, the preimage of Z(F/[F,R])."""
        free, commutator = self.free, self.commutator
        kernel: List[Vector] = []
        for parity in (Parity.EVEN, Parity.ODD):
            block = [i for i, p in enumerate(free.parities) if p == parity]
            if not block:
                continue
            rows: Dict[Tuple[int, int], Vector] = {}
            for col, i in enumerate(block):
                for g in range(free.generator_count):
                    for k, c in commutator.reduce(free.ad(g, {i: Fraction(1)})).items():
                        rows.setdefault((g, k), {})[col] = c
            for v in nullspace(list(rows.values()), len(block)):
                kernel.append({block[col]: c for col, c in v.items()})
        return GradedSubspace(free.parities, kernel)

    def epicenter(self) -> OracleResult:
        preimage = self.central_preimage
        image = preimage + self.relations
        dim = image.superdim - self.relations.superdim
        reps = self._representatives(preimage, self.relations)
        ideal = None
        realization = self.presentation.realization
        if realization is not None:
            project = self.projection()
            target = realization.algebra
            ideal = GradedSubspace(target.parities, (project(v) for v in preimage.basis))
            if ideal.superdim != dim:
                raise ConsistencyError(f"epicenter pushed to {target.name} has superdim {ideal.superdim}, expected {dim}")
        return OracleResult("epicenter", dim, reps, self.class_bound, ideal)

    def projection(self) -> Callable[[Mapping[int, Fraction]], Vector]:
        """``F -> L`` through the realization of the presentation."""
        realization = self.presentation.realization
        if realization is None:
            raise ConsistencyError("presentation carries no realization")
        images = [realization.image(g) for g in range(self.free.generator_count)]
        return self.free.homomorphism(realization.algebra, images)

    def check_central_extension(self) -> bool:
        """``R/[F,R]`` is central in ``F/[F,R]`` and ``F/R`` has the expected size. Raises ConsistencyError."""
        free = self.free
        for r in self.relations.basis:
            for i in range(free.dim):
                if not self.commutator.contains(free.bracket({i: Fraction(1)}, r)):
                    raise ConsistencyError(f"[{free.word(i)}, {free.render(r)}] is not in [F, R]")
        realization = self.presentation.realization
        if realization is not None:
            target = realization.algebra
            if self.presented_superdim != target.superdim:
                raise ConsistencyError(f"F/R has superdim {self.presented_superdim}, {target.name} has {target.superdim}")
            project = self.projection()
            for r in self.relations.basis:
                if project(r):
                    raise ConsistencyError(f"relation {free.render(r)} does not vanish in {target.name}")
        return True


@lru_cache(maxsize=32)
def hopf_computation(presentation: FreePresentation, limits: Optional[OracleLimits] = None) -> HopfComputation:
    return HopfComputation(presentation, limits)


def _run(
    presentation: FreePresentation,
    quantity: Callable[[HopfComputation], OracleResult],
    verify_stability: Optional[bool],
    limits: Optional[OracleLimits],
) -> OracleResult:
    limits = limits or OracleLimits.from_config()
    result = quantity(hopf_computation(presentation, limits))
    if verify_stability is None:
        verify_stability = default_verify_stability()
    if verify_stability:
        bumped = quantity(hopf_computation(presentation.with_class_bound(presentation.class_bound + 1), limits))
        if bumped.superdim != result.superdim:
            raise ClassBoundError(
                f"{result.quantity} changed from {result.superdim} to {bumped.superdim} "
                f"when the class bound was raised to {presentation.class_bound + 1}"
            )
    return result


def hopf_multiplier(
    presentation: FreePresentation, verify_stability: Optional[bool] = None, limits: Optional[OracleLimits] = None
) -> OracleResult:
    return _run(presentation, HopfComputation.multiplier, verify_stability, limits)


def exterior_square_oracle(
    presentation: FreePresentation, verify_stability: Optional[bool] = None, limits: Optional[OracleLimits] = None
) -> OracleResult:
    return _run(presentation, HopfComputation.exterior_square, verify_stability, limits)


def epicenter_oracle(
    presentation: FreePresentation, verify_stability: Optional[bool] = None, limits: Optional[OracleLimits] = None
) -> OracleResult:
    return _run(presentation, HopfComputation.epicenter, verify_stability, limits)


__all__ = [
    "OracleResult",
    "HopfComputation",
    "hopf_computation",
    "ideal_closure",
    "hopf_multiplier",
    "exterior_square_oracle",
    "epicenter_oracle",
]
