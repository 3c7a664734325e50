import os
from fractions import Fraction

import pytest

from core.algebra import LieSuperalgebra, Parity
from core.catalog import construct
from core.oracle import OracleLimits

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

E, O = Parity.EVEN, Parity.ODD


def data_path(name):
    return os.path.join(DATA_DIR, name)


def frac(num, den=1):
    return Fraction(num, den)


@pytest.fixture
def limits():
    return OracleLimits(max_generators=8, max_class_bound=5, max_total_dim=8)


@pytest.fixture
def h10():
    return construct("H(1,0)")


@pytest.fixture
def h01():
    return construct("H(0,1)")


@pytest.fixture
def h1():
    return construct("H_1")


@pytest.fixture
def jacobi_breaker():
    """Even, skew and graded, but [e1,[e2,e3]] + cyclic = -e3."""
    return LieSuperalgebra(
        [E, E, E],
        {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {0: -1}},
        name="broken",
    )


@pytest.fixture
def solvable():
    """[e1, e2] = e2: solvable, not nilpotent."""
    return LieSuperalgebra([E, E], {(0, 1): {1: 1}}, name="aff")
