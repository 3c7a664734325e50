"""
core.oracle.presentation
------------------------

Free presentations ``0 -> R -> F -> L -> 0`` of nilpotent Lie superalgebras,
their YAML file format and the canonical presentation of a given algebra.

Presentation files::

    version: 1
    class_bound: 3
    generators:
      - {name: x, parity: even}
      - {name: y, parity: odd}
    relators:
      - "(y y)"
      - "(x (x y))"
      - "(y (x y))"
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import yaml

from core.algebra.lie import LieSuperalgebra
from core.algebra.structure import derived_subalgebra, nilpotency_class, require_valid
from core.algebra.superspace import Parity
from core.errors import ClassBoundError, InputError, InterchangeError, PreconditionError
from core.oracle.free_nilpotent import truncated_free
from core.oracle.limits import OracleLimits
from core.oracle.words import NAME, Bracket, Combination, Generator, Term, generators_of, parse_term, term_parity, to_sexpr
from utils.linalg import Vector, nullspace

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Realization:
    """An algebra presented by the presentation and the images of the generators in it."""

    algebra: LieSuperalgebra
    images: Tuple[Tuple[Tuple[int, Fraction], ...], ...]

    def image(self, g: int) -> Vector:
        return dict(self.images[g])


@dataclass(frozen=True)
class FreePresentation:
    generators: Tuple[Tuple[str, Parity], ...]
    relators: Tuple[Term, ...]
    class_bound: int
    realization: Optional[Realization] = None

    def __post_init__(self):
        names = [name for name, _ in self.generators]
        if len(set(names)) != len(names):
            raise InputError("generator names must be distinct")
        for name in names:
            if not NAME.match(name):
                raise InputError(f"bad generator name {name!r}")
        if self.class_bound < 2:
            raise InputError(f"class_bound must be at least 2, got {self.class_bound}")
        parities = self.parities
        for k, relator in enumerate(self.relators):
            unknown = sorted(set(generators_of(relator)) - set(parities))
            if unknown:
                raise InputError(f"relator {k} uses unknown generators {unknown}")
            term_parity(relator, parities)
        if self.realization is not None and len(self.realization.images) != len(self.generators):
            raise InputError("realization needs one image per generator")

    @property
    def parities(self) -> Dict[str, Parity]:
        return {name: parity for name, parity in self.generators}

    def with_class_bound(self, class_bound: int) -> "FreePresentation":
        return replace(self, class_bound=class_bound)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "version": FORMAT_VERSION,
            "class_bound": self.class_bound,
            "generators": [{"name": name, "parity": str(parity)} for name, parity in self.generators],
            "relators": [to_sexpr(r) for r in self.relators],
        }


def _relator_positions(text: str) -> List[Tuple[Optional[int], int]]:
    """1-based (line, column) of each relator string in a presentation file."""
    try:
        root = yaml.compose(text)
    except yaml.YAMLError:
        return []
    if not isinstance(root, yaml.MappingNode):
        return []
    for key, value in root.value:
        if getattr(key, "value", None) == "relators" and isinstance(value, yaml.SequenceNode):
            out = []
            for item in value.value:
                quoted = 1 if getattr(item, "style", None) in ('"', "'") else 0
                out.append((item.start_mark.line + 1, item.start_mark.column + 1 + quoted))
            return out
    return []


def loads_presentation(text: str) -> FreePresentation:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        line = mark.line + 1 if mark is not None else None
        column = mark.column + 1 if mark is not None else None
        raise InterchangeError(f"invalid YAML: {getattr(exc, 'problem', exc)}", line=line, column=column) from exc
    if not isinstance(data, Mapping):
        raise InterchangeError("presentation must be a YAML mapping")
    if data.get("version") != FORMAT_VERSION:
        raise InterchangeError(f"unsupported presentation version {data.get('version')!r}; expected {FORMAT_VERSION}")
    try:
        class_bound = int(data["class_bound"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InterchangeError("class_bound must be an integer") from exc
    generators = []
    for k, entry in enumerate(data.get("generators") or []):
        if not isinstance(entry, Mapping) or "name" not in entry:
            raise InterchangeError(f"generator {k} needs a name and a parity")
        generators.append((str(entry["name"]), Parity.parse(str(entry.get("parity", "even")))))
    names = {name for name, _ in generators}
    positions = _relator_positions(text)
    relators = []
    for k, raw in enumerate(data.get("relators") or []):
        line, column = positions[k] if k < len(positions) else (None, 1)
        relators.append(parse_term(str(raw), names, line=line, column=column))
    return FreePresentation(tuple(generators), tuple(relators), class_bound)


def read_presentation(path: Union[str, "os.PathLike[str]"]) -> FreePresentation:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_presentation(fh.read())


def dumps_presentation(presentation: FreePresentation) -> str:
    return yaml.safe_dump(presentation.to_dict(), sort_keys=False)


def _generator_names(L: LieSuperalgebra, indices: Sequence[int]) -> List[str]:
    if all(NAME.match(label) for label in L.labels):
        return [L.labels[i] for i in indices]
    return [f"e{i + 1}" for i in indices]


def _structure_relators(L: LieSuperalgebra, names: Sequence[str]) -> List[Term]:
    gens = [Generator(name) for name in names]
    relators: List[Term] = []
    for i in range(L.dim):
        for j in range(i, L.dim):
            if i == j and L.parity(i) == Parity.EVEN:
                continue
            head: Term = Bracket(gens[i], gens[j])
            value = L.basis_bracket(i, j)
            if value:
                head = Combination(((Fraction(1), head),) + tuple((-c, gens[k]) for k, c in sorted(value.items())))
            relators.append(head)
    return relators


def _kernel_relators(L: LieSuperalgebra, generators: Sequence[Tuple[str, Parity]], images, bound, limits) -> List[Term]:
    free = truncated_free(generators, bound, limits)
    project = free.homomorphism(L, [dict(v) for v in images])
    columns = [project({i: Fraction(1)}) for i in range(free.dim)]
    relators: List[Term] = []
    for parity in (Parity.EVEN, Parity.ODD):
        block = [i for i, p in enumerate(free.parities) if p == parity]
        if not block:
            continue
        rows: Dict[int, Vector] = {}
        for col, i in enumerate(block):
            for k, c in columns[i].items():
                rows.setdefault(k, {})[col] = c
        for v in nullspace(list(rows.values()), len(block)):
            relators.append(free.term_of({block[col]: c for col, c in v.items()}))
    return relators


def presentation_of(
    L: LieSuperalgebra,
    class_bound: Optional[int] = None,
    minimal: bool = False,
    limits: Optional[OracleLimits] = None,
) -> FreePresentation:
    """Presentation of a nilpotent ``L`` with an attached realization.

    By default there is one generator per basis vector and one relator
    ``[e_i, e_j] - sum c^k e_k`` per pair ``i <= j`` (even diagonal pairs
    skipped). With ``minimal`` the generators are the basis vectors outside
    the pivots of ``L'`` and the relators span the kernel of ``F -> L``,
    which keeps the free algebra small.
    """
    require_valid(L)
    cls = nilpotency_class(L)
    if cls is None:
        raise PreconditionError(f"{L.name} is not nilpotent and has no finite nilpotent presentation")
    minimum = max(cls + 1, 2)
    bound = minimum if class_bound is None else class_bound
    if bound < minimum:
        raise ClassBoundError(f"class_bound {bound} is below nilpotency class {cls} + 1")
    chosen = derived_subalgebra(L).complement_indices() if minimal else list(range(L.dim))
    generators = tuple(zip(_generator_names(L, chosen), (L.parity(i) for i in chosen)))
    images = tuple(((i, Fraction(1)),) for i in chosen)
    if minimal:
        relators = _kernel_relators(L, generators, images, bound, limits)
    else:
        relators = _structure_relators(L, [name for name, _ in generators])
    logger.debug("%s presented on %d generators with %d relators at class bound %d", L.name, len(generators), len(relators), bound)
    return FreePresentation(generators, tuple(relators), bound, Realization(L, images))


__all__ = [
    "FreePresentation",
    "Realization",
    "loads_presentation",
    "read_presentation",
    "dumps_presentation",
    "presentation_of",
]
