"""
core.algebra.structure
----------------------

Axiom checks and structural constructions on ``LieSuperalgebra`` objects:
derived subalgebra, center, lower central series, nilpotency class, direct
sums, quotients by graded ideals and changes of homogeneous basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from core.algebra.lie import LieSuperalgebra
from core.algebra.subspace import GradedSubspace, vector_parity
from core.algebra.superspace import Parity, SuperDim, koszul_sign
from core.errors import InputError, InvalidAlgebraError, NotAnIdealError, NotGradedError
from utils.linalg import Vector, VectorLike, add, as_vector, inverse, nullspace

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class Violation:
    axiom: str
    indices: Tuple[int, ...]
    residual: Dict[int, Fraction] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "axiom": self.axiom,
            "indices": list(self.indices),
            "residual": {str(k): str(c) for k, c in sorted(self.residual.items())},
        }


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms_violated(self) -> List[str]:
        return sorted({v.axiom for v in self.violations})

    def to_dict(self) -> Dict[str, Any]:
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}


def jacobi_residual(L: LieSuperalgebra, u: VectorLike, v: VectorLike, w: VectorLike) -> Vector:
    """Super Jacobi sum for homogeneous ``u, v, w``; zero when the identity holds.

    (-1)^{|u||w|}[u,[v,w]] + (-1)^{|v||u|}[v,[w,u]] + (-1)^{|w||v|}[w,[u,v]]

    A zero argument has no parity and gives the empty vector. Mixed-parity
    arguments raise NotGradedError.
    """
    u, v, w = as_vector(u), as_vector(v), as_vector(w)
    parities = [vector_parity(L.parities, x) for x in (u, v, w)]
    if None in parities:
        return {}
    pu, pv, pw = parities
    out = add({}, L.bracket(u, L.bracket(v, w)), koszul_sign(pu, pw))
    out = add(out, L.bracket(v, L.bracket(w, u)), koszul_sign(pv, pu))
    return add(out, L.bracket(w, L.bracket(u, v)), koszul_sign(pw, pv))


def validate(L: LieSuperalgebra) -> ValidationReport:
    """Check grading, super skew-symmetry and the super Jacobi identity on basis triples."""
    violations: List[Violation] = []
    for (i, j), vec in L.structure_constants():
        expected = L.parity(i) + L.parity(j)
        stray = {k: c for k, c in vec.items() if L.parity(k) != expected}
        if stray:
            violations.append(Violation("grading", (i, j), stray))
        if i == j and L.parity(i) == Parity.EVEN:
            violations.append(Violation("skew_symmetry", (i, i), vec))
    for (i, j), diff in sorted(L.skew_conflicts.items()):
        violations.append(Violation("skew_symmetry", (i, j), diff))
    d = L.dim
    for i in range(d):
        for j in range(i, d):
            for k in range(j, d):
                r = jacobi_residual(L, L.basis_vector(i), L.basis_vector(j), L.basis_vector(k))
                if r:
                    violations.append(Violation("jacobi", (i, j, k), r))
    if violations:
        logger.debug("%s: %d axiom violations", L.name, len(violations))
    return ValidationReport(tuple(violations))


def require_valid(L: LieSuperalgebra) -> None:
    report = validate(L)
    if not report.ok:
        raise InvalidAlgebraError(f"{L.name} violates: {', '.join(report.axioms_violated())}", report)


def bracket(L: LieSuperalgebra, u: VectorLike, v: VectorLike) -> Vector:
    return L.bracket(u, v)


def superdim(x: Union[LieSuperalgebra, GradedSubspace]) -> SuperDim:
    return x.superdim


def derived_subalgebra(L: LieSuperalgebra) -> GradedSubspace:
    return GradedSubspace(L.parities, (vec for _, vec in L.structure_constants()))


def center(L: LieSuperalgebra) -> GradedSubspace:
    """Solve ``[u, e_j] = 0`` for all ``j``, separately on each parity block."""
    kernel: List[Vector] = []
    for block in (L.even_indices, L.odd_indices):
        if not block:
            continue
        rows: Dict[Tuple[int, int], Vector] = {}
        for col, i in enumerate(block):
            for j in range(L.dim):
                for k, c in L.basis_bracket(i, j).items():
                    rows.setdefault((j, k), {})[col] = c
        for v in nullspace(list(rows.values()), len(block)):
            kernel.append({block[col]: c for col, c in v.items()})
    return GradedSubspace(L.parities, kernel)


def lower_central_series(L: LieSuperalgebra) -> List[GradedSubspace]:
    """``[L, [L, L], [L, [L, L]], ...]`` up to the first zero or repeated term."""
    series = [GradedSubspace.full(L.parities)]
    while series[-1].dim:
        current = series[-1]
        nxt = GradedSubspace(
            L.parities,
            (L.bracket(v, L.basis_vector(j)) for v in current.basis for j in range(L.dim)),
        )
        if nxt == current:
            break
        series.append(nxt)
    return series


def nilpotency_class(L: LieSuperalgebra) -> Optional[int]:
    """Number of non-zero terms of the lower central series, ``None`` if it stabilises above zero."""
    series = lower_central_series(L)
    if series[-1].dim:
        return None
    return len(series) - 1


def is_nilpotent(L: LieSuperalgebra) -> bool:
    return nilpotency_class(L) is not None


def is_graded_ideal(L: LieSuperalgebra, U: GradedSubspace) -> bool:
    if U.parities != L.parities:
        raise InputError("subspace does not live in this algebra")
    return all(U.contains(L.bracket(v, L.basis_vector(j))) for v in U.basis for j in range(L.dim))


def direct_sum(L: LieSuperalgebra, K: LieSuperalgebra, name: Optional[str] = None) -> LieSuperalgebra:
    """``L ⊕ K`` with basis ``evens(L), evens(K), odds(L), odds(K)``.

    Labels of ``K`` that clash with labels of ``L`` get primes appended.
    """
    left, right = summand_maps(L, K)
    d = L.dim + K.dim
    parities: List[Parity] = [Parity.EVEN] * d
    labels: List[str] = [""] * d
    for i, new in enumerate(left):
        parities[new], labels[new] = L.parity(i), L.labels[i]
    taken = set(L.labels)
    for i, new in enumerate(right):
        label = K.labels[i]
        while label in taken:
            label += "'"
        taken.add(label)
        parities[new], labels[new] = K.parity(i), label
    constants: Dict[Tuple[int, int], Vector] = {}
    for summand, index_map in ((L, left), (K, right)):
        for (i, j), vec in summand.structure_constants():
            constants[(index_map[i], index_map[j])] = {index_map[k]: c for k, c in vec.items()}
    return LieSuperalgebra(parities, constants, name=name or f"{L.name}+{K.name}", labels=labels)


def summand_maps(L: LieSuperalgebra, K: LieSuperalgebra) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Where each basis vector of ``L`` and of ``K`` lands in ``direct_sum(L, K)``."""
    le, ke = L.superdim.even, K.superdim.even
    left = tuple(i if L.parity(i) == Parity.EVEN else ke + i for i in range(L.dim))
    right = tuple(le + i if K.parity(i) == Parity.EVEN else L.dim + i for i in range(K.dim))
    return left, right


def quotient(L: LieSuperalgebra, ideal: GradedSubspace, name: Optional[str] = None) -> LieSuperalgebra:
    """``L / ideal`` on the basis of standard vectors that are not pivots of the ideal."""
    if not is_graded_ideal(L, ideal):
        raise NotAnIdealError(f"subspace of superdim {ideal.superdim} is not an ideal of {L.name}")
    keep = ideal.complement_indices()
    position = {old: new for new, old in enumerate(keep)}

    def project(v: Mapping[int, Fraction]) -> Vector:
        return {position[k]: c for k, c in ideal.reduce(v).items()}

    constants: Dict[Tuple[int, int], Vector] = {}
    for a, i in enumerate(keep):
        for b in range(a, len(keep)):
            vec = project(L.basis_bracket(i, keep[b]))
            if vec:
                constants[(a, b)] = vec
    return LieSuperalgebra(
        [L.parity(i) for i in keep],
        constants,
        name=name or f"{L.name}/I",
        labels=[L.labels[i] for i in keep],
    )


def change_basis(L: LieSuperalgebra, rows: Sequence[VectorLike], name: Optional[str] = None) -> LieSuperalgebra:
    """Rewrite ``L`` in the basis ``f_a = sum_i rows[a][i] e_i``.

    Each new basis vector must be homogeneous with the parity of the old
    vector in the same position, so the even-first layout is kept.
    """
    d = L.dim
    matrix = [as_vector(r) for r in rows]
    if len(matrix) != d:
        raise InputError(f"change of basis needs {d} rows, got {len(matrix)}")
    for a, row in enumerate(matrix):
        if any(not 0 <= k < d for k in row):
            raise InputError(f"row {a} has an index outside dimension {d}")
        parity = vector_parity(L.parities, row)
        if parity is not None and parity != L.parity(a):
            raise NotGradedError(f"new basis vector {a} must be {L.parity(a)}")
    dense = [[row.get(k, Fraction(0)) for k in range(d)] for row in matrix]
    try:
        inv = inverse(dense)
    except ValueError as exc:
        raise InputError(f"change of basis matrix is singular: {exc}") from exc

    def to_new(v: Mapping[int, Fraction]) -> Vector:
        out: Vector = {}
        for i, c in v.items():
            out = add(out, {a: x for a, x in enumerate(inv[i]) if x}, c)
        return out

    constants = {}
    for a in range(d):
        for b in range(a, d):
            vec = to_new(L.bracket(matrix[a], matrix[b]))
            if vec:
                constants[(a, b)] = vec
    return LieSuperalgebra(L.parities, constants, name=name or L.name, labels=[f"f{a + 1}" for a in range(d)])


__all__ = [
    "Violation",
    "ValidationReport",
    "validate",
    "require_valid",
    "jacobi_residual",
    "bracket",
    "superdim",
    "derived_subalgebra",
    "center",
    "lower_central_series",
    "nilpotency_class",
    "is_nilpotent",
    "is_graded_ideal",
    "direct_sum",
    "summand_maps",
    "quotient",
    "change_basis",
]
