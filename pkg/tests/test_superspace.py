import pytest

from core.algebra import ZERO, GradedSubspace, Parity, SuperDim, koszul_sign
from core.errors import InputError, NotGradedError

E, O = Parity.EVEN, Parity.ODD


def test_parity_adds_mod_two():
    assert E + O == O
    assert O + O == E
    assert 1 + O == E
    assert isinstance(O + O, Parity)


def test_parity_parse():
    assert Parity.parse("odd") == O
    assert Parity.parse(" Even ") == E
    assert Parity.parse(1) == O
    with pytest.raises(InputError):
        Parity.parse("sideways")


def test_koszul_sign():
    assert koszul_sign(O, O) == -1
    assert koszul_sign(E, O) == 1
    assert koszul_sign(E, E) == 1


def test_superdim_arithmetic_and_text():
    a = SuperDim(2, 3)
    assert a.total == 5
    assert str(a) == "(2|3)"
    assert a + SuperDim(1, 1) == SuperDim(3, 4)
    assert a - SuperDim(2, 0) == SuperDim(0, 3)
    assert SuperDim.parse(" (4 | 0) ") == SuperDim(4, 0)
    assert ZERO.to_dict() == {"even": 0, "odd": 0}


def test_superdim_rejects_bad_values():
    with pytest.raises(InputError):
        SuperDim(-1, 0)
    with pytest.raises(InputError):
        SuperDim(1, 0) - SuperDim(0, 1)
    with pytest.raises(InputError):
        SuperDim.parse("2|3")


def test_graded_subspace_superdim_and_membership():
    parities = [E, E, O]
    U = GradedSubspace(parities, [{0: 1, 1: 1}, {2: 2}])
    assert U.superdim == SuperDim(1, 1)
    assert U.contains({0: 3, 1: 3})
    assert not U.contains({0: 1})
    assert U.complement_indices() == [1]


def test_graded_subspace_rejects_mixed_vectors():
    with pytest.raises(NotGradedError):
        GradedSubspace([E, O], [{0: 1, 1: 1}])


def test_graded_hull_splits_into_homogeneous_parts():
    U = GradedSubspace.graded_hull([E, O], [{0: 1, 1: 1}])
    assert U.superdim == SuperDim(1, 1)


def test_equal_spans_compare_equal():
    parities = [E, E]
    assert GradedSubspace(parities, [{0: 1}, {0: 1, 1: 1}]) == GradedSubspace.full(parities)
    assert GradedSubspace.zero(parities).dim == 0


def test_supported_on_intersects_with_coordinate_span():
    parities = [E, E, E]
    U = GradedSubspace(parities, [{0: 1, 1: 1}, {2: 1}])
    inside = U.supported_on([1, 2])
    assert inside.superdim == SuperDim(1, 0)
    assert inside.contains({2: 1})


def test_independent_modulo():
    parities = [E, E, E]
    U = GradedSubspace(parities, [{0: 1}])
    assert U.independent_modulo([{0: 5}, {1: 1}, {0: 1, 1: 1}, {2: 1}]) == [1, 3]
