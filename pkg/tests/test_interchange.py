import json

import pytest

from conftest import data_path
from core.algebra import dumps_algebra, loads_algebra, read_algebra, write_algebra
from core.catalog import construct
from core.errors import InterchangeError


def test_fixture_matches_catalog():
    assert read_algebra(data_path("h10.json")) == construct("H(1,0)")


def test_dump_is_canonical(h10):
    with open(data_path("h10.json"), encoding="utf-8") as fh:
        assert dumps_algebra(h10) == fh.read()


def test_write_then_read(tmp_path, h1):
    path = tmp_path / "h1.json"
    write_algebra(h1, path)
    back = read_algebra(path)
    assert back == h1
    assert back.labels == h1.labels
    assert back.name == "H_1"


def test_fractions_survive():
    text = json.dumps(
        {
            "version": 1,
            "dim_even": 3,
            "dim_odd": 0,
            "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 2, "num": -3, "den": 4}]}],
        }
    )
    L = loads_algebra(text)
    assert str(L.basis_bracket(0, 1)[2]) == "-3/4"
    assert loads_algebra(dumps_algebra(L)) == L


def test_invalid_json_carries_position():
    with pytest.raises(InterchangeError) as info:
        loads_algebra('{"version": 1,\n  "dim_even": }')
    assert info.value.line == 2


@pytest.mark.parametrize(
    "document",
    [
        {"version": 2, "dim_even": 1, "dim_odd": 0},
        {"version": 1, "dim_even": "two", "dim_odd": 0},
        {"version": 1, "dim_even": 2, "dim_odd": 0, "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 1, "num": 1, "den": 0}]}]},
        {"version": 1, "dim_even": 2, "dim_odd": 0, "brackets": [{"i": 0, "j": 1}, {"i": 0, "j": 1}]},
        [1, 2, 3],
    ],
)
def test_malformed_documents(document):
    with pytest.raises(InterchangeError):
        loads_algebra(json.dumps(document))
