"""
core.oracle.free_nilpotent
--------------------------

Free nilpotent Lie superalgebras ``F / γ_{c+1}(F)`` on graded generators.

Degree ``d`` is spanned by the brackets ``[g, w]`` of a generator with a
degree ``d-1`` basis word. Each candidate is expanded in the free
associative superalgebra (``[a, b] = ab - (-1)^{|a||b|} ba``); a maximal
independent set of expansions becomes the basis of degree ``d`` and the
remaining candidates are recorded as combinations of it. That gives
``ad(g)`` on every basis vector. Brackets of arbitrary basis words follow
from ``[[g, u], v] = [g, [u, v]] - (-1)^{|g||u|} [u, [g, v]]``.

The per-degree super-dimensions are checked against the super PBW count in
``free_superdims``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from core.algebra.lie import LieSuperalgebra
from core.algebra.superspace import Parity, SuperDim, koszul_sign
from core.errors import ConsistencyError, InputError
from core.oracle.limits import OracleLimits
from core.oracle.words import Bracket, Combination, Generator, Term
from utils.linalg import Vector, add, combine, independent_columns

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

Monomial = Tuple[int, ...]
Polynomial = Dict[Monomial, Fraction]


def free_superdims(p: int, q: int, class_bound: int) -> List[SuperDim]:
    """Super-dimension of each degree ``1..class_bound`` of the free Lie superalgebra on (p|q) generators.

    With ``b[i, j]`` the dimension in bidegree (i even letters, j odd letters),
    ``prod (1 - x^i y^j)^(-b) (j even) * prod (1 + x^i y^j)^b (j odd)`` equals
    ``1 / (1 - p x - q y)``, whose ``x^i y^j`` coefficient is ``C(i+j, i) p^i q^j``.
    """
    series: Dict[Tuple[int, int], int] = {(0, 0): 1}
    out: List[SuperDim] = []
    for d in range(1, class_bound + 1):
        found: Dict[Tuple[int, int], int] = {}
        for i in range(d + 1):
            j = d - i
            found[(i, j)] = comb(d, i) * p**i * q**j - series.get((i, j), 0)
        even = sum(b for (i, j), b in found.items() if j % 2 == 0)
        odd = sum(b for (i, j), b in found.items() if j % 2 == 1)
        out.append(SuperDim(even, odd))
        for (a, e), b in found.items():
            if b:
                series = _times_factor(series, a, e, b, class_bound)
    return out


def _times_factor(series: Dict[Tuple[int, int], int], a: int, e: int, b: int, cap: int) -> Dict[Tuple[int, int], int]:
    step = a + e
    if e % 2:
        coeffs = [comb(b, k) for k in range(cap // step + 1)]
    else:
        coeffs = [comb(b + k - 1, k) for k in range(cap // step + 1)]
    out: Dict[Tuple[int, int], int] = {}
    for (i, j), c in series.items():
        for k, f in enumerate(coeffs):
            if not f or i + j + k * step > cap:
                continue
            key = (i + k * a, j + k * e)
            out[key] = out.get(key, 0) + c * f
    return out


def _commutator(g: int, g_parity: int, poly: Mapping[Monomial, Fraction], w_parity: int) -> Polynomial:
    sign = koszul_sign(g_parity, w_parity)
    out: Polynomial = {}
    for mono, c in poly.items():
        out[(g,) + mono] = out.get((g,) + mono, 0) + c
        key = mono + (g,)
        out[key] = out.get(key, 0) - sign * c
    return {k: c for k, c in out.items() if c}


@dataclass(frozen=True)
class _Structure:
    """Generator-agnostic free nilpotent algebra on ``p`` even then ``q`` odd generators."""

    p: int
    q: int
    class_bound: int
    parities: Tuple[Parity, ...]
    degrees: Tuple[int, ...]
    # None for a generator, (g, w) for the word [g, w]
    words: Tuple[Optional[Tuple[int, int]], ...]
    generator_basis: Tuple[int, ...]
    # ad[g] maps a basis index to [g, e_index]
    ad: Tuple[Dict[int, Vector], ...]


@lru_cache(maxsize=16)
def _free_structure(p: int, q: int, class_bound: int) -> _Structure:
    ngens = p + q
    gen_parity = [Parity.EVEN] * p + [Parity.ODD] * q
    parity: List[Parity] = []
    degree: List[int] = []
    word: List[Optional[Tuple[int, int]]] = []
    ad: List[Dict[int, Vector]] = [dict() for _ in range(ngens)]
    expansions: Dict[int, Polynomial] = {}

    layer = []
    for g in range(ngens):
        idx = len(parity)
        parity.append(gen_parity[g])
        degree.append(1)
        word.append(None)
        expansions[idx] = {(g,): Fraction(1)}
        layer.append(idx)

    for d in range(2, class_bound + 1):
        if not layer:
            break
        candidates = [(g, w) for g in range(ngens) for w in layer]
        polys = [_commutator(g, gen_parity[g], expansions[w], parity[w]) for g, w in candidates]
        monomials: Dict[Monomial, int] = {}
        columns = [{monomials.setdefault(m, len(monomials)): c for m, c in poly.items()} for poly in polys]
        chosen, dependent = independent_columns(columns, len(monomials))
        new_layer = []
        index_of: Dict[int, int] = {}
        for j in chosen:
            g, w = candidates[j]
            idx = len(parity)
            parity.append(gen_parity[g] + parity[w])
            degree.append(d)
            word.append((g, w))
            expansions[idx] = polys[j]
            index_of[j] = idx
            new_layer.append(idx)
            ad[g][w] = {idx: Fraction(1)}
        for j, expr in dependent.items():
            if expr:
                g, w = candidates[j]
                ad[g][w] = {index_of[k]: c for k, c in expr.items()}
        for w in layer:
            expansions.pop(w, None)
        logger.debug("free (%d|%d) degree %d: %d candidates, %d basis words", p, q, d, len(candidates), len(chosen))
        layer = new_layer

    # even basis vectors first, degree order inside each parity
    order = sorted(range(len(parity)), key=lambda i: (parity[i], i))
    new = {old: k for k, old in enumerate(order)}
    return _Structure(
        p=p,
        q=q,
        class_bound=class_bound,
        parities=tuple(parity[i] for i in order),
        degrees=tuple(degree[i] for i in order),
        words=tuple(None if word[i] is None else (word[i][0], new[word[i][1]]) for i in order),
        generator_basis=tuple(new[g] for g in range(ngens)),
        ad=tuple({new[w]: {new[k]: c for k, c in vec.items()} for w, vec in table.items()} for table in ad),
    )


class TruncatedFreeAlgebra:
    """The free nilpotent Lie superalgebra of class ``class_bound`` on named generators."""

    def __init__(self, generators: Sequence[Tuple[str, Parity]], class_bound: int):
        self.generators: Tuple[Tuple[str, Parity], ...] = tuple((str(n), Parity.parse(p)) for n, p in generators)
        self.class_bound = class_bound
        evens = [g for g, (_, par) in enumerate(self.generators) if par == Parity.EVEN]
        odds = [g for g, (_, par) in enumerate(self.generators) if par == Parity.ODD]
        # presentation generator -> structure generator
        self._slot = {g: k for k, g in enumerate(evens + odds)}
        self._generator_of_slot = evens + odds
        self._name_of_slot = [self.generators[g][0] for g in evens + odds]
        self._structure = _free_structure(len(evens), len(odds), class_bound)
        self._index = {name: self._structure.generator_basis[self._slot[g]] for g, (name, _) in enumerate(self.generators)}
        self._memo: Dict[Tuple[int, int], Vector] = {}
        self._check_dimensions()

    def _check_dimensions(self) -> None:
        expected = free_superdims(self._structure.p, self._structure.q, self.class_bound)
        actual = self.degree_superdims()
        if actual != expected:
            raise ConsistencyError(f"free algebra degrees {list(map(str, actual))} disagree with the PBW count {list(map(str, expected))}")

    # shape ------------------------------------------------------------
    @property
    def parities(self) -> Tuple[Parity, ...]:
        return self._structure.parities

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self._structure.degrees

    @property
    def dim(self) -> int:
        return len(self._structure.parities)

    @property
    def superdim(self) -> SuperDim:
        odd = sum(1 for p in self.parities if p == Parity.ODD)
        return SuperDim(self.dim - odd, odd)

    def degree_superdims(self) -> List[SuperDim]:
        out = []
        for d in range(1, self.class_bound + 1):
            even = sum(1 for p, k in zip(self.parities, self.degrees) if k == d and p == Parity.EVEN)
            odd = sum(1 for p, k in zip(self.parities, self.degrees) if k == d and p == Parity.ODD)
            out.append(SuperDim(even, odd))
        return out

    def indices_of_degree(self, low: int, high: Optional[int] = None) -> List[int]:
        high = self.class_bound if high is None else high
        return [i for i, d in enumerate(self.degrees) if low <= d <= high]

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def generator_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown generator {name!r}") from None

    def generator_vector(self, g: int) -> Vector:
        return {self._index[self.generators[g][0]]: Fraction(1)}

    def word_expansion(self, i: int) -> Optional[Tuple[int, int]]:
        """``(g, w)`` when basis vector ``i`` is the word ``[generator g, e_w]``; ``None`` for a generator."""
        entry = self._structure.words[i]
        if entry is None:
            return None
        return self._generator_of_slot[entry[0]], entry[1]

    def word(self, i: int) -> str:
        entry = self._structure.words[i]
        if entry is None:
            slot = self._structure.generator_basis.index(i)
            return self._name_of_slot[slot]
        g, w = entry
        return f"[{self._name_of_slot[g]},{self.word(w)}]"

    def word_term(self, i: int) -> Term:
        entry = self._structure.words[i]
        if entry is None:
            return Generator(self._name_of_slot[self._structure.generator_basis.index(i)])
        g, w = entry
        return Bracket(Generator(self._name_of_slot[g]), self.word_term(w))

    def term_of(self, v: Mapping[int, Fraction]) -> Term:
        return Combination(tuple((v[k], self.word_term(k)) for k in sorted(v, key=lambda k: (self.degrees[k], k))))

    def render(self, v: Mapping[int, Fraction]) -> str:
        parts = []
        for k in sorted(v, key=lambda k: (self.degrees[k], k)):
            c = v[k]
            body = self.word(k) if abs(c) == 1 else f"{abs(c)}*{self.word(k)}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        return ("-" if parts[0][0] == "-" else "") + parts[0][1] + "".join(f" {s} {b}" for s, b in parts[1:])

    # brackets ---------------------------------------------------------
    def ad(self, g: int, v: Mapping[int, Fraction]) -> Vector:
        """``[generator g, v]``; ``g`` indexes ``self.generators``."""
        return self._ad_slot(self._slot[g], v)

    def _ad_slot(self, slot: int, v: Mapping[int, Fraction]) -> Vector:
        table = self._structure.ad[slot]
        return combine((c, table.get(k, {})) for k, c in v.items())

    def _basis_bracket(self, i: int, j: int) -> Vector:
        if self.degrees[i] + self.degrees[j] > self.class_bound:
            return {}
        key = (i, j)
        if key in self._memo:
            return self._memo[key]
        entry = self._structure.words[i]
        if entry is None:
            slot = self._structure.generator_basis.index(i)
            out = dict(self._structure.ad[slot].get(j, {}))
        else:
            g, u = entry
            g_parity = Parity.EVEN if g < self._structure.p else Parity.ODD
            first = self._ad_slot(g, self._basis_bracket(u, j))
            inner = self._ad_slot(g, {j: Fraction(1)})
            second = combine((c, self._basis_bracket(u, k)) for k, c in inner.items())
            out = add(first, second, -koszul_sign(g_parity, self.parities[u]))
        self._memo[key] = out
        return out

    def bracket(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Vector:
        out: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                out = add(out, self._basis_bracket(i, j), a * b)
        return out

    def evaluate(self, term: Term) -> Vector:
        if isinstance(term, Generator):
            return {self.generator_index(term.name): Fraction(1)}
        if isinstance(term, Bracket):
            return self.bracket(self.evaluate(term.left), self.evaluate(term.right))
        if isinstance(term, Combination):
            return combine((c, self.evaluate(t)) for c, t in term.terms)
        raise InputError(f"not a bracket term: {term!r}")

    def homomorphism(self, target: LieSuperalgebra, images: Sequence[Mapping[int, Fraction]]) -> Callable[[Mapping[int, Fraction]], Vector]:
        """The map ``F -> target`` sending generator ``g`` to ``images[g]``."""
        if len(images) != self.generator_count:
            raise InputError(f"need {self.generator_count} generator images, got {len(images)}")
        table: Dict[int, Vector] = {}
        for g in range(self.generator_count):
            table[self._index[self.generators[g][0]]] = dict(images[g])
        for i in sorted(range(self.dim), key=lambda k: self.degrees[k]):
            if i not in table:
                g, w = self.word_expansion(i)
                table[i] = target.bracket(table[self._index[self.generators[g][0]]], table[w])

        def apply(v: Mapping[int, Fraction]) -> Vector:
            return combine((c, table[k]) for k, c in v.items())

        return apply

    @cached_property
    def algebra(self) -> LieSuperalgebra:
        """The truncated free algebra as structure constants, labelled by basis words."""
        constants = {}
        for i in range(self.dim):
            for j in range(i, self.dim):
                vec = self._basis_bracket(i, j)
                if vec:
                    constants[(i, j)] = vec
        labels = [self.word(i) for i in range(self.dim)]
        return LieSuperalgebra(self.parities, constants, name=f"F{self.class_bound}", labels=labels)


def truncated_free(
    generators: Sequence[Tuple[str, Parity]], class_bound: int, limits: Optional[OracleLimits] = None
) -> TruncatedFreeAlgebra:
    limits = limits or OracleLimits.from_config()
    limits.check_presentation(len(generators), class_bound)
    if class_bound < 1:
        raise InputError(f"class_bound must be positive, got {class_bound}")
    return TruncatedFreeAlgebra(generators, class_bound)


def free_nilpotent(
    generators: Sequence[Tuple[str, Parity]], class_bound: int, limits: Optional[OracleLimits] = None
) -> TruncatedFreeAlgebra:
    if not generators:
        raise InputError("free_nilpotent needs at least one generator")
    return truncated_free(generators, class_bound, limits)


__all__ = ["TruncatedFreeAlgebra", "free_nilpotent", "free_superdims", "truncated_free"]
