"""
core.catalog.families
---------------------

Tags naming catalog algebras, and their canonical text form.

    A(m|n)        abelian, superdim (m|n)
    H(m,n)        Heisenberg superalgebra with even center, superdim (2m+1|n)
    H_m           Heisenberg superalgebra with odd center, superdim (m|m+1)
    cover_of_H1   a class-3 algebra whose central quotient is H_1

Summands are joined with ``+``: ``H(1,0)+A(2|0)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple, Union

from core.errors import InputError

NAMED_EXAMPLES = ("cover_of_H1",)


def _check_nonnegative(*values: int) -> None:
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise InputError(f"family parameters must be non-negative integers, got {v!r}")


@dataclass(frozen=True)
class Abelian:
    m: int
    n: int

    def __post_init__(self):
        _check_nonnegative(self.m, self.n)

    def label(self) -> str:
        return f"A({self.m}|{self.n})"


@dataclass(frozen=True)
class HeisenbergEven:
    m: int
    n: int

    def __post_init__(self):
        _check_nonnegative(self.m, self.n)
        if self.m + self.n < 1:
            raise InputError("H(m,n) needs m + n >= 1")

    def label(self) -> str:
        return f"H({self.m},{self.n})"


@dataclass(frozen=True)
class HeisenbergOdd:
    m: int

    def __post_init__(self):
        _check_nonnegative(self.m)
        if self.m < 1:
            raise InputError("H_m needs m >= 1")

    def label(self) -> str:
        return f"H_{self.m}"


@dataclass(frozen=True)
class NamedExample:
    name: str

    def __post_init__(self):
        if self.name not in NAMED_EXAMPLES:
            raise InputError(f"unknown named example {self.name!r}; known: {', '.join(NAMED_EXAMPLES)}")

    def label(self) -> str:
        return self.name


BaseTag = Union[Abelian, HeisenbergEven, HeisenbergOdd, NamedExample]


@dataclass(frozen=True)
class DirectSum:
    summands: Tuple[BaseTag, ...]

    def __post_init__(self):
        if len(self.summands) < 2:
            raise InputError("a direct sum needs at least two summands")

    def label(self) -> str:
        return "+".join(s.label() for s in self.summands)


FamilyTag = Union[Abelian, HeisenbergEven, HeisenbergOdd, NamedExample, DirectSum]

_ABELIAN = re.compile(r"^A\((\d+)\|(\d+)\)$")
_EVEN = re.compile(r"^H\((\d+),(\d+)\)$")
_ODD = re.compile(r"^H_\{?(\d+)\}?$")


def _parse_summand(text: str) -> BaseTag:
    match = _ABELIAN.match(text)
    if match:
        return Abelian(int(match.group(1)), int(match.group(2)))
    match = _EVEN.match(text)
    if match:
        return HeisenbergEven(int(match.group(1)), int(match.group(2)))
    match = _ODD.match(text)
    if match:
        return HeisenbergOdd(int(match.group(1)))
    if text in NAMED_EXAMPLES:
        return NamedExample(text)
    raise InputError(f"unknown catalog tag {text!r}")


def parse_tag(text: str) -> FamilyTag:
    """Read ``A(2|0)``, ``H(1,0)+A(1|0)``, ``H_2`` and the like."""
    compact = re.sub(r"\s+", "", text or "")
    if not compact:
        raise InputError("empty catalog tag")
    summands = tuple(_parse_summand(part) for part in compact.split("+"))
    return summands[0] if len(summands) == 1 else DirectSum(summands)


def direct_sum_tag(*tags: FamilyTag) -> FamilyTag:
    """Flatten tags into one ``DirectSum`` (or the single tag)."""
    parts = []
    for tag in tags:
        parts.extend(tag.summands if isinstance(tag, DirectSum) else (tag,))
    return parts[0] if len(parts) == 1 else DirectSum(tuple(parts))


__all__ = [
    "Abelian",
    "HeisenbergEven",
    "HeisenbergOdd",
    "NamedExample",
    "DirectSum",
    "FamilyTag",
    "BaseTag",
    "NAMED_EXAMPLES",
    "parse_tag",
    "direct_sum_tag",
]
