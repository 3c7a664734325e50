"""Hand-written free presentations shipped with the catalog."""

from __future__ import annotations

from typing import Dict

from core.errors import InputError
from core.oracle.presentation import FreePresentation, loads_presentation

# H_1 on x (even) and y (odd): [x,y] survives, [y,y] and the degree-three words die
H1_PRESENTATION = """\
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

NAMED_PRESENTATIONS: Dict[str, str] = {"H_1": H1_PRESENTATION}


def named_presentation(name: str) -> FreePresentation:
    try:
        return loads_presentation(NAMED_PRESENTATIONS[name])
    except KeyError:
        raise InputError(f"no named presentation {name!r}; known: {sorted(NAMED_PRESENTATIONS)}") from None


__all__ = ["H1_PRESENTATION", "NAMED_PRESENTATIONS", "named_presentation"]
