"""
core.algebra.superspace
-----------------------

Parities and super-dimensions of Z/2-graded vector spaces.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Dict, Union

from core.errors import InputError

Scalar = Fraction


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        if isinstance(other, int):
            return Parity((int(self) + int(other)) % 2)
        return NotImplemented

    __radd__ = __add__

    def __str__(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, value: Union[str, int, "Parity"]) -> "Parity":
        if isinstance(value, str):
            text = value.strip().lower()
            if text in ("even", "0"):
                return cls.EVEN
            if text in ("odd", "1"):
                return cls.ODD
            raise InputError(f"unknown parity {value!r}; expected 'even' or 'odd'")
        if value in (0, 1):
            return cls(int(value))
        raise InputError(f"unknown parity {value!r}")


def koszul_sign(a: int, b: int) -> int:
    """``(-1)^(a*b)`` for parities ``a`` and ``b``."""
    return -1 if (a % 2 and b % 2) else 1


_SUPERDIM = re.compile(r"^\s*\(\s*(\d+)\s*\|\s*(\d+)\s*\)\s*$")


@dataclass(frozen=True)
class SuperDim:
    """A pair ``(m|n)``: dimension of the even part and of the odd part."""

    even: int = 0
    odd: int = 0

    def __post_init__(self):
        for value in (self.even, self.odd):
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise InputError(f"super-dimension entries must be non-negative integers, got ({self.even}|{self.odd})")

    @property
    def total(self) -> int:
        return self.even + self.odd

    def __add__(self, other: "SuperDim") -> "SuperDim":
        if not isinstance(other, SuperDim):
            return NotImplemented
        return SuperDim(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "SuperDim") -> "SuperDim":
        if not isinstance(other, SuperDim):
            return NotImplemented
        even, odd = self.even - other.even, self.odd - other.odd
        if even < 0 or odd < 0:
            raise InputError(f"{self} - {other} is not a super-dimension")
        return SuperDim(even, odd)

    def __str__(self) -> str:
        return f"({self.even}|{self.odd})"

    def to_dict(self) -> Dict[str, int]:
        return {"even": self.even, "odd": self.odd}

    @classmethod
    def parse(cls, text: str) -> "SuperDim":
        match = _SUPERDIM.match(text)
        if not match:
            raise InputError(f"cannot read super-dimension {text!r}; expected '(m|n)'")
        return cls(int(match.group(1)), int(match.group(2)))


ZERO = SuperDim(0, 0)


__all__ = ["Scalar", "Parity", "SuperDim", "ZERO", "koszul_sign"]
