import pytest

from core.capability import (
    MAX_TABLE_CORANK,
    CapabilityStatus,
    EvenHeisenbergPlusAbelian,
    OddHeisenbergPlusAbelian,
    capable_algebra_of_corank,
    capable_tag_of_corank,
    corank_table,
    is_capable,
    predicted_corank,
    recognize,
)
from core.catalog import construct
from core.errors import InputError, PreconditionError
from core.formulas import corank
from core.oracle import hopf_multiplier, presentation_of


def _constructible(k):
    return [e for e in corank_table(k) if e.tag is not None]


def _heisenberg_sums(limit=4):
    """H(m,n)+A(r|s) and H_m+A(r|s) with every parameter below ``limit``."""
    for r in range(limit):
        for s in range(limit):
            for m in range(limit):
                for n in range(limit):
                    if m + n >= 1:
                        yield EvenHeisenbergPlusAbelian(m, n, r, s)
                if m >= 1:
                    yield OddHeisenbergPlusAbelian(m, r, s)


@pytest.mark.parametrize("k", range(MAX_TABLE_CORANK + 1))
def test_table_entries_have_the_listed_corank(k):
    for entry in _constructible(k):
        value = predicted_corank(recognize(construct(entry.tag))).value
        if entry.known_divergent and entry.published:
            assert value == 5
        else:
            assert value == k, entry.label


def test_table_covers_every_heisenberg_sum_in_range():
    listed = {k: {e.label for e in corank_table(k)} for k in range(MAX_TABLE_CORANK + 1)}
    for descriptor in _heisenberg_sums():
        k = predicted_corank(descriptor).value
        if k <= MAX_TABLE_CORANK:
            assert descriptor.label() in listed[k], descriptor.label()


def test_unpublished_entries_are_flagged():
    unpublished = {k: [e.label for e in corank_table(k) if not e.published] for k in range(MAX_TABLE_CORANK + 1)}
    assert unpublished == {
        0: [],
        1: [],
        2: ["H(1,0)+A(0|1)"],
        3: ["H(1,0)+A(1|1)", "H(1,0)+A(0|2)"],
        4: ["H(1,1)", "H(1,0)+A(2|1)", "H(1,0)+A(1|2)", "H(1,0)+A(0|3)", "H(0,2)+A(1|0)", "H(0,2)+A(0|1)"],
    }
    for k in range(MAX_TABLE_CORANK + 1):
        for entry in corank_table(k):
            if not entry.published:
                assert entry.known_divergent
                assert entry.note == "missing from the published list"


def test_table_sizes():
    assert [len(corank_table(k)) for k in range(5)] == [1, 1, 3, 7, 16]
    assert corank_table(0)[0].parametric
    opaque = [e.label for e in corank_table(4) if not e.constructible]
    assert opaque == ["L_{5,0}", "L_{4,0}"]


def test_table_bounds():
    with pytest.raises(InputError):
        corank_table(-1)
    with pytest.raises(PreconditionError):
        corank_table(MAX_TABLE_CORANK + 1)


def test_table_entries_serialise():
    entries = {e.label: e for e in corank_table(4)}
    data = entries["H_1+A(2|0)"].to_dict()
    assert data["known_divergent"] is True
    assert data["published"] is True
    assert "note" in data
    assert entries["H(1,1)"].to_dict() == {
        "label": "H(1,1)",
        "parametric": False,
        "constructible": True,
        "known_divergent": True,
        "published": False,
        "note": "missing from the published list",
    }


@pytest.mark.parametrize("k", [0, 1, 2, 5, 9])
def test_capable_algebra_of_any_corank(k):
    L = capable_algebra_of_corank(k)
    assert predicted_corank(recognize(L)).value == k
    assert is_capable(L).status == CapabilityStatus.CAPABLE


def test_capable_tags():
    assert capable_tag_of_corank(0).label() == "A(2|0)"
    assert capable_tag_of_corank(1).label() == "H(1,0)"
    assert capable_tag_of_corank(3).label() == "H(1,0)+A(2|0)"
    with pytest.raises(InputError):
        capable_tag_of_corank(-2)


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3])
def test_oracle_reproduces_the_table(k, limits):
    for entry in _constructible(k):
        L = construct(entry.tag)
        mult = hopf_multiplier(presentation_of(L, minimal=True, limits=limits), limits=limits)
        assert corank(L.superdim, mult.superdim).value == k, entry.label
