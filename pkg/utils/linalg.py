"""
utils.linalg
------------

Exact linear algebra over the rationals.

Vectors are sparse dicts mapping a coordinate index to a non-zero
``Fraction``. Elimination is delegated to sympy's sparse ``DomainMatrix``
over ``QQ``; this module only converts between the two representations and
reads results back.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

Vector = Dict[int, Fraction]
VectorLike = Union[Mapping[int, Union[int, Fraction]], Sequence[Union[int, Fraction]]]

RREF_METHODS = ("FF", "GJ", "auto")


@lru_cache(maxsize=1)
def default_rref_method() -> str:
    try:
        from config import get_config

        method = str(get_config("oracle").get("linalg", {}).get("rref_method", "FF"))
    except (FileNotFoundError, ImportError):
        method = "FF"
    if method not in RREF_METHODS:
        logger.warning("unknown rref_method %r in config, using FF", method)
        method = "FF"
    return method


def to_qq(value: Union[int, Fraction]):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def as_vector(v: VectorLike) -> Vector:
    """Sparse copy of ``v`` with zero entries dropped. Accepts mappings and dense sequences."""
    items = v.items() if isinstance(v, Mapping) else enumerate(v)
    out: Vector = {}
    for k, c in items:
        c = Fraction(c)
        if c:
            out[int(k)] = c
    return out


def add(u: Mapping[int, Fraction], v: Mapping[int, Fraction], scale: Union[int, Fraction] = 1) -> Vector:
    """``u + scale * v``."""
    out = dict(u)
    if not scale:
        return out
    for k, c in v.items():
        s = out.get(k, 0) + scale * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def scale(v: Mapping[int, Fraction], c: Union[int, Fraction]) -> Vector:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def combine(terms: Iterable[Tuple[Union[int, Fraction], Mapping[int, Fraction]]]) -> Vector:
    out: Vector = {}
    for c, v in terms:
        if c:
            out = add(out, v, c)
    return out


def _matrix(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> DomainMatrix:
    dod = {}
    for r, row in enumerate(rows):
        entries = {c: to_qq(x) for c, x in row.items() if x}
        if entries:
            dod[r] = entries
    return DomainMatrix.from_dod(dod, (len(rows), ncols), QQ)


def _rref(rows: Sequence[Mapping[int, Fraction]], ncols: int, method: Optional[str]) -> Tuple[List[Vector], List[int]]:
    if not any(rows) or ncols == 0:
        return [], []
    reduced, pivots = _matrix(rows, ncols).rref(method=method or default_rref_method())
    dod = reduced.to_dod()
    out = [{c: from_qq(x) for c, x in dod.get(r, {}).items()} for r in range(len(pivots))]
    return out, list(pivots)


def rref(
    rows: Sequence[Mapping[int, Fraction]],
    ncols: int,
    column_order: Optional[Sequence[int]] = None,
    method: Optional[str] = None,
) -> Tuple[List[Vector], List[int]]:
    """Reduced row echelon form of the row space.

    Returns the non-zero rows and their pivot columns. With ``column_order``
    elimination treats the columns in that order, so pivots prefer the
    columns listed first.
    """
    if column_order is None:
        return _rref(rows, ncols, method)
    position = {c: p for p, c in enumerate(column_order)}
    if len(position) != ncols:
        raise ValueError("column_order must be a permutation of range(ncols)")
    permuted = [{position[c]: x for c, x in row.items()} for row in rows]
    reduced, pivots = _rref(permuted, ncols, method)
    order = list(column_order)
    return [{order[c]: x for c, x in row.items()} for row in reduced], [order[p] for p in pivots]


def rank(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> List[Vector]:
    """Basis of ``{x : sum_c row[c] * x[c] == 0 for every row}``, one vector per free column."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v: Vector = {free: Fraction(1)}
        for row, p in zip(reduced, pivots):
            c = row.get(free)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def independent_columns(
    columns: Sequence[Mapping[int, Fraction]], nrows: int, method: Optional[str] = None
) -> Tuple[List[int], Dict[int, Vector]]:
    """Greedy maximal independent subset of ``columns``, scanned in order.

    Returns the selected column positions and, for every other column, its
    coefficients ``{selected position: c}`` over the selected ones.
    """
    dod: Dict[int, Dict[int, object]] = {}
    for j, col in enumerate(columns):
        for i, x in col.items():
            if x:
                dod.setdefault(i, {})[j] = to_qq(x)
    if not dod:
        return [], {j: {} for j in range(len(columns))}
    matrix = DomainMatrix.from_dod(dod, (nrows, len(columns)), QQ)
    reduced, pivots = matrix.rref(method=method or default_rref_method())
    rows = reduced.to_dod()
    pivots = list(pivots)
    chosen = set(pivots)
    dependent: Dict[int, Vector] = {}
    for j in range(len(columns)):
        if j in chosen:
            continue
        expr: Vector = {}
        for r, p in enumerate(pivots):
            x = rows.get(r, {}).get(j)
            if x:
                expr[p] = from_qq(x)
        dependent[j] = expr
    return pivots, dependent


def inverse(matrix: Sequence[Sequence[Union[int, Fraction]]]) -> List[List[Fraction]]:
    """Inverse of a square rational matrix given as a list of rows. Raises ``ValueError`` if singular."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        return []
    rows = [as_vector(row) for row in matrix]
    if rank(rows, n) < n:
        raise ValueError("matrix is singular")
    inv = _matrix(rows, n).to_dense().inv().to_dod()
    return [[from_qq(inv.get(i, {}).get(j, QQ(0))) for j in range(n)] for i in range(n)]


class Echelon:
    """Reduced row echelon basis of a subspace with constant-time pivot lookup."""

    __slots__ = ("rows", "pivots", "_row_of")

    def __init__(self, rows: List[Vector], pivots: List[int]):
        self.rows = rows
        self.pivots = pivots
        self._row_of = {p: r for r, p in enumerate(pivots)}

    @classmethod
    def span(cls, vectors: Iterable[Mapping[int, Fraction]], ncols: int, column_order: Optional[Sequence[int]] = None) -> "Echelon":
        return cls(*rref(list(vectors), ncols, column_order=column_order))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Mapping[int, Fraction]) -> Vector:
        """Normal form of ``v`` modulo the span; zero iff ``v`` lies in it."""
        out = dict(v)
        for k, c in list(v.items()):
            r = self._row_of.get(k)
            if r is not None and c:
                out = add(out, self.rows[r], -c)
        return out

    def contains(self, v: Mapping[int, Fraction]) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: Mapping[int, Fraction]) -> Vector:
        """Coefficients of ``v`` over ``rows``; only meaningful when ``contains(v)``."""
        return {r: v[p] for r, p in enumerate(self.pivots) if v.get(p)}


__all__ = [
    "Vector",
    "VectorLike",
    "Echelon",
    "as_vector",
    "add",
    "scale",
    "combine",
    "rref",
    "rank",
    "nullspace",
    "independent_columns",
    "inverse",
    "to_qq",
    "from_qq",
    "default_rref_method",
]
