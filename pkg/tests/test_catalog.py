import pytest

from core.algebra import SuperDim, validate
from core.catalog import (
    Abelian,
    DirectSum,
    HeisenbergEven,
    HeisenbergOdd,
    construct,
    direct_sum_tag,
    named_presentation,
    parse_tag,
)
from core.errors import InputError


@pytest.mark.parametrize(
    "text, tag",
    [
        ("A(2|1)", Abelian(2, 1)),
        ("H(1,0)", HeisenbergEven(1, 0)),
        ("H_3", HeisenbergOdd(3)),
        ("H_{2}", HeisenbergOdd(2)),
        (" H(0,1) + A(1|0) ", DirectSum((HeisenbergEven(0, 1), Abelian(1, 0)))),
    ],
)
def test_parse_tag(text, tag):
    assert parse_tag(text) == tag


@pytest.mark.parametrize("text", ["", "B(1|0)", "H(0,0)", "H_0", "A(1,0)", "H(1,0)+"])
def test_parse_tag_rejects(text):
    with pytest.raises(InputError):
        parse_tag(text)


def test_labels_round_trip():
    for text in ("A(0|3)", "H(2,1)", "H_2+A(1|1)"):
        assert parse_tag(text).label() == text


@pytest.mark.parametrize(
    "tag, superdim",
    [
        ("A(3|2)", SuperDim(3, 2)),
        ("H(2,1)", SuperDim(5, 1)),
        ("H(0,3)", SuperDim(1, 3)),
        ("H_2", SuperDim(2, 3)),
        ("H(1,0)+A(1|1)", SuperDim(4, 1)),
        ("cover_of_H1", SuperDim(1, 3)),
    ],
)
def test_construct_superdims(tag, superdim):
    L = construct(tag)
    assert L.superdim == superdim
    assert validate(L).ok
    assert L.name == tag


def test_heisenberg_brackets():
    L = construct("H(1,1)")
    assert L.labels == ("x1", "x2", "z", "y1")
    assert L.basis_bracket(0, 1) == {2: 1}
    assert L.basis_bracket(3, 3) == {2: 1}
    H = construct("H_1")
    assert H.labels == ("x1", "y1", "z")
    assert H.basis_bracket(0, 1) == {2: 1}


def test_direct_sum_tag_flattens():
    tag = direct_sum_tag(parse_tag("H(1,0)+A(1|0)"), Abelian(0, 1))
    assert tag.label() == "H(1,0)+A(1|0)+A(0|1)"
    assert direct_sum_tag(Abelian(1, 0)) == Abelian(1, 0)


def test_named_presentation():
    presentation = named_presentation("H_1")
    assert [name for name, _ in presentation.generators] == ["x", "y"]
    assert presentation.class_bound == 3
    with pytest.raises(InputError):
        named_presentation("H_9")
