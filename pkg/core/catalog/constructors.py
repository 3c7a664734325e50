"""Constructors for the catalog families.

Basis orders are fixed so serialized fixtures stay stable:

    H(m,n)        x1..x2m, z | y1..yn     [x_i, x_{m+i}] = z, [y_j, y_j] = z
    H_m           x1..xm | y1..ym, z      [x_j, y_j] = z
    cover_of_H1   x | y, r, z             [x, y] = r, [x, r] = z
"""

from __future__ import annotations

from functools import reduce
from typing import Dict, Tuple

from core.algebra import LieSuperalgebra, Parity, direct_sum
from core.catalog.families import (
    Abelian,
    DirectSum,
    FamilyTag,
    HeisenbergEven,
    HeisenbergOdd,
    NamedExample,
    parse_tag,
)
from core.errors import InputError
from utils.linalg import Vector

E, O = Parity.EVEN, Parity.ODD


def abelian(m: int, n: int) -> LieSuperalgebra:
    tag = Abelian(m, n)
    labels = [f"a{i + 1}" for i in range(m)] + [f"b{j + 1}" for j in range(n)]
    return LieSuperalgebra([E] * m + [O] * n, {}, name=tag.label(), labels=labels)


def heisenberg_even(m: int, n: int) -> LieSuperalgebra:
    tag = HeisenbergEven(m, n)
    z = 2 * m
    constants: Dict[Tuple[int, int], Vector] = {}
    for i in range(m):
        constants[(i, m + i)] = {z: 1}
    for j in range(n):
        y = z + 1 + j
        constants[(y, y)] = {z: 1}
    labels = [f"x{i + 1}" for i in range(2 * m)] + ["z"] + [f"y{j + 1}" for j in range(n)]
    return LieSuperalgebra([E] * (2 * m + 1) + [O] * n, constants, name=tag.label(), labels=labels)


def heisenberg_odd(m: int) -> LieSuperalgebra:
    tag = HeisenbergOdd(m)
    z = 2 * m
    constants = {(j, m + j): {z: 1} for j in range(m)}
    labels = [f"x{j + 1}" for j in range(m)] + [f"y{j + 1}" for j in range(m)] + ["z"]
    return LieSuperalgebra([E] * m + [O] * (m + 1), constants, name=tag.label(), labels=labels)


def named_example(label: str) -> LieSuperalgebra:
    NamedExample(label)
    # cover_of_H1 is the only entry
    return LieSuperalgebra(
        [E, O, O, O],
        {(0, 1): {2: 1}, (0, 2): {3: 1}},
        name=label,
        labels=["x", "y", "r", "z"],
    )


def construct(tag: FamilyTag) -> LieSuperalgebra:
    """Build the algebra a tag (or its text form) names."""
    if isinstance(tag, str):
        tag = parse_tag(tag)
    if isinstance(tag, Abelian):
        return abelian(tag.m, tag.n)
    if isinstance(tag, HeisenbergEven):
        return heisenberg_even(tag.m, tag.n)
    if isinstance(tag, HeisenbergOdd):
        return heisenberg_odd(tag.m)
    if isinstance(tag, NamedExample):
        return named_example(tag.name)
    if isinstance(tag, DirectSum):
        *head, last = (construct(s) for s in tag.summands)
        return direct_sum(reduce(direct_sum, head), last, name=tag.label())
    raise InputError(f"not a catalog tag: {tag!r}")


__all__ = ["abelian", "heisenberg_even", "heisenberg_odd", "named_example", "construct"]
