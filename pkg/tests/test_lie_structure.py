from fractions import Fraction

import pytest

from core.algebra import (
    GradedSubspace,
    LieSuperalgebra,
    Parity,
    SuperDim,
    center,
    change_basis,
    derived_subalgebra,
    direct_sum,
    is_graded_ideal,
    is_nilpotent,
    jacobi_residual,
    lower_central_series,
    nilpotency_class,
    quotient,
    require_valid,
    validate,
)
from core.catalog import construct
from core.errors import InputError, InvalidAlgebraError, NotAnIdealError, NotGradedError

E, O = Parity.EVEN, Parity.ODD


def test_brackets_follow_super_skew_symmetry(h10, h01):
    assert h10.bracket({0: 1}, {1: 1}) == {2: 1}
    assert h10.basis_bracket(1, 0) == {2: -1}
    # odd-odd brackets are symmetric
    assert h01.basis_bracket(1, 1) == {0: 1}


def test_entries_below_the_diagonal_are_mirrored():
    L = LieSuperalgebra([E, E, E], {(1, 0): {2: 1}})
    assert L.basis_bracket(0, 1) == {2: -1}
    assert validate(L).ok


def test_constructor_rejects_bad_shapes():
    with pytest.raises(InputError):
        LieSuperalgebra([O, E])
    with pytest.raises(InputError):
        LieSuperalgebra([E, E], {(0, 2): {1: 1}})
    with pytest.raises(InputError):
        LieSuperalgebra([E], labels=["a", "b"])


@pytest.mark.parametrize("tag", ["A(2|1)", "H(1,0)", "H(0,2)", "H(1,1)", "H_1", "H_2", "cover_of_H1", "H(1,0)+A(1|1)"])
def test_catalog_algebras_are_valid(tag):
    assert validate(construct(tag)).ok


def test_jacobi_violation_is_reported(jacobi_breaker):
    report = validate(jacobi_breaker)
    assert not report.ok
    assert report.axioms_violated() == ["jacobi"]
    assert jacobi_residual(jacobi_breaker, {0: 1}, {1: 1}, {2: 1}) == {2: -1}
    with pytest.raises(InvalidAlgebraError) as info:
        require_valid(jacobi_breaker)
    assert info.value.report is not None


def test_jacobi_residual_of_a_zero_argument_is_empty(jacobi_breaker):
    assert jacobi_residual(jacobi_breaker, {}, {1: 1}, {2: 1}) == {}
    assert jacobi_residual(jacobi_breaker, {0: 1}, {1: 0}, {2: 1}) == {}
    L = construct("H_1")
    assert jacobi_residual(L, {0: 1}, {1: 1}, {}) == {}
    with pytest.raises(NotGradedError):
        jacobi_residual(L, {0: 1, 1: 1}, {1: 1}, {0: 1})


def test_grading_violation_is_reported():
    L = LieSuperalgebra([E, O], {(0, 1): {0: 1}})
    assert "grading" in validate(L).axioms_violated()


def test_even_diagonal_must_vanish():
    L = LieSuperalgebra([E, E], {(0, 0): {1: 1}})
    assert validate(L).axioms_violated() == ["skew_symmetry"]


def test_conflicting_mirrored_entries_are_reported():
    L = LieSuperalgebra([E, E, E], {(0, 1): {2: 1}, (1, 0): {2: 1}})
    violations = validate(L).violations
    assert [v.axiom for v in violations] == ["skew_symmetry"]
    assert violations[0].residual == {2: 2}


def test_derived_center_and_class(h10, h01, h1):
    assert derived_subalgebra(h10).superdim == SuperDim(1, 0)
    assert center(h10).superdim == SuperDim(1, 0)
    assert derived_subalgebra(h1).superdim == SuperDim(0, 1)
    assert center(h01).superdim == SuperDim(1, 0)
    assert nilpotency_class(h10) == 2
    assert nilpotency_class(construct("A(2|2)")) == 1
    assert nilpotency_class(construct("cover_of_H1")) == 3


def test_solvable_algebra_is_not_nilpotent(solvable):
    assert not is_nilpotent(solvable)
    assert nilpotency_class(solvable) is None
    series = lower_central_series(solvable)
    assert [s.dim for s in series] == [2, 1]


def test_center_of_abelian_is_everything():
    L = construct("A(1|2)")
    assert center(L) == GradedSubspace.full(L.parities)


def test_direct_sum_keeps_evens_first_and_renames_clashes():
    L = direct_sum(construct("H(0,1)"), construct("A(1|1)"))
    assert L.superdim == SuperDim(2, 2)
    assert list(L.parities) == [E, E, O, O]
    assert validate(L).ok
    twice = direct_sum(construct("A(1|0)"), construct("A(1|0)"))
    assert twice.labels == ("a1", "a1'")
    assert twice.name == "A(1|0)+A(1|0)"
    assert direct_sum(construct("A(1|0)"), construct("A(0|1)"), name="A(1|1)").name == "A(1|1)"


@pytest.mark.parametrize("label", ["H(1,0)+A(1|0)", "H_1+A(0|1)", "H(0,1)+A(1|0)+A(0|1)"])
def test_constructed_sums_carry_their_tag_label(label):
    left = construct(label)
    assert left.name == label
    right = construct(label)
    assert right is not left
    assert right.name == label


def test_direct_sum_brackets_do_not_mix():
    L = construct("H(1,0)+A(0|1)")
    odd = L.odd_indices[0]
    assert all(not L.basis_bracket(i, odd) for i in range(L.dim))


def test_quotient_by_center(h10):
    Q = quotient(h10, center(h10))
    assert Q.superdim == SuperDim(2, 0)
    assert Q.is_abelian()


def test_quotient_rejects_non_ideals(h10):
    U = GradedSubspace(h10.parities, [{0: 1}])
    assert not is_graded_ideal(h10, U)
    with pytest.raises(NotAnIdealError):
        quotient(h10, U)


def test_quotient_of_cover_is_h1():
    cover = construct("cover_of_H1")
    Q = quotient(cover, center(cover))
    assert Q.superdim == SuperDim(1, 2)
    assert nilpotency_class(Q) == 2
    assert derived_subalgebra(Q).superdim == SuperDim(0, 1)


def test_change_basis(h10):
    M = change_basis(h10, [[1, 0, 0], [1, 1, 0], [0, 0, 2]])
    assert validate(M).ok
    assert M.basis_bracket(0, 1) == {2: Fraction(1, 2)}
    with pytest.raises(InputError):
        change_basis(h10, [[1, 0, 0], [2, 0, 0], [0, 0, 1]])


def test_change_basis_keeps_parities(h01):
    with pytest.raises(NotGradedError):
        change_basis(h01, [[0, 1], [1, 0]])


def test_render_uses_labels(h10):
    assert h10.render({0: 1, 2: Fraction(-1, 2)}) == "x1 - 1/2*z"
    assert h10.render({}) == "0"
