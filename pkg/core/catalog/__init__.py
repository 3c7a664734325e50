"""Catalog of named Lie superalgebra families."""

from .families import (
    NAMED_EXAMPLES,
    Abelian,
    BaseTag,
    DirectSum,
    FamilyTag,
    HeisenbergEven,
    HeisenbergOdd,
    NamedExample,
    direct_sum_tag,
    parse_tag,
)
from .constructors import abelian, construct, heisenberg_even, heisenberg_odd, named_example
from .presentations import H1_PRESENTATION, NAMED_PRESENTATIONS, named_presentation

__all__ = [
    "NAMED_EXAMPLES",
    "Abelian",
    "BaseTag",
    "DirectSum",
    "FamilyTag",
    "HeisenbergEven",
    "HeisenbergOdd",
    "NamedExample",
    "direct_sum_tag",
    "parse_tag",
    "abelian",
    "construct",
    "heisenberg_even",
    "heisenberg_odd",
    "named_example",
    "H1_PRESENTATION",
    "NAMED_PRESENTATIONS",
    "named_presentation",
]
