"""Hopf-formula oracle: truncated free algebras, presentations and ideal computations."""

from .limits import OracleLimits, default_verify_stability
from .words import Bracket, Combination, Generator, Term, parse_term, render, term_parity, to_sexpr
from .presentation import (
    FreePresentation,
    Realization,
    dumps_presentation,
    loads_presentation,
    presentation_of,
    read_presentation,
)
from .free_nilpotent import TruncatedFreeAlgebra, free_nilpotent, free_superdims
from .hopf import (
    HopfComputation,
    OracleResult,
    epicenter_oracle,
    exterior_square_oracle,
    hopf_computation,
    hopf_multiplier,
    ideal_closure,
)

__all__ = [
    "OracleLimits",
    "default_verify_stability",
    "Bracket",
    "Combination",
    "Generator",
    "Term",
    "parse_term",
    "render",
    "term_parity",
    "to_sexpr",
    "FreePresentation",
    "Realization",
    "dumps_presentation",
    "loads_presentation",
    "presentation_of",
    "read_presentation",
    "TruncatedFreeAlgebra",
    "free_nilpotent",
    "free_superdims",
    "HopfComputation",
    "OracleResult",
    "epicenter_oracle",
    "exterior_square_oracle",
    "hopf_computation",
    "hopf_multiplier",
    "ideal_closure",
]
