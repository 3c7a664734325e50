from fractions import Fraction

import pytest

from utils.linalg import Echelon, add, as_vector, independent_columns, inverse, nullspace, rank, rref


def test_as_vector_drops_zeros():
    assert as_vector([0, 2, 0, Fraction(1, 3)]) == {1: 2, 3: Fraction(1, 3)}
    assert as_vector({4: 0, 5: 1}) == {5: 1}


def test_add_cancels_entries():
    assert add({0: 1, 1: 2}, {1: 1}, -2) == {0: 1}


def test_rref_normalises_rows():
    rows, pivots = rref([{0: 2, 1: 4}, {0: 1, 1: 2}], 2)
    assert pivots == [0]
    assert rows == [{0: 1, 1: 2}]


def test_rref_column_order_prefers_listed_columns():
    rows, pivots = rref([{0: 1, 1: 2}], 2, column_order=[1, 0])
    assert pivots == [1]
    assert rows == [{1: 1, 0: Fraction(1, 2)}]


def test_rank_and_nullspace():
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}]
    assert rank(rows, 3) == 2
    (v,) = nullspace(rows, 3)
    assert v == {2: 1, 0: 1, 1: -1}


def test_nullspace_of_nothing_is_everything():
    assert nullspace([], 2) == [{0: 1}, {1: 1}]


def test_independent_columns_reports_dependencies():
    chosen, dependent = independent_columns([{0: 1}, {0: 2}, {1: 1}, {0: 1, 1: 1}], 2)
    assert chosen == [0, 2]
    assert dependent == {1: {0: 2}, 3: {0: 1, 2: 1}}


def test_inverse():
    assert inverse([[2, 0], [0, 4]]) == [[Fraction(1, 2), 0], [0, Fraction(1, 4)]]
    assert inverse([[1, 1], [0, 1]]) == [[1, -1], [0, 1]]
    with pytest.raises(ValueError):
        inverse([[1, 2], [2, 4]])


def test_echelon_reduce_and_coordinates():
    ech = Echelon.span([{0: 1, 2: 1}, {1: 1}], 3)
    assert ech.contains({0: 2, 1: 3, 2: 2})
    assert ech.reduce({2: 1}) == {2: 1}
    assert ech.coordinates({0: 2, 1: 3, 2: 2}) == {0: 2, 1: 3}
