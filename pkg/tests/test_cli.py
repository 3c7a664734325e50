import json
import logging

import pytest

from conftest import data_path
from cli.main import EXIT_CHECK, EXIT_INPUT, EXIT_LIMIT, EXIT_NOT_CAPABLE, EXIT_OK, EXIT_UNDECIDED, main
from core.algebra import dumps_algebra, read_algebra, write_algebra
from core.catalog import construct


@pytest.fixture(autouse=True)
def _detach_stderr_handlers():
    yield
    # the stderr handler binds the captured stream of the test that created it
    for name in ("core", "cli"):
        logging.getLogger(name).handlers.clear()


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_validate_a_tag(capsys):
    assert main(["validate", "H(1,0)"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("command: validate\n")
    assert "nilpotency_class: 2" in out


def test_validate_a_broken_file(tmp_path, capsys, jacobi_breaker):
    path = tmp_path / "broken.json"
    write_algebra(jacobi_breaker, path)
    assert main(["validate", str(path), "--json"]) == EXIT_CHECK
    assert _json(capsys)["results"]["validation"]["ok"] is False


def test_construct_to_stdout_and_file(tmp_path, capsys):
    assert main(["construct", "H_1"]) == EXIT_OK
    assert capsys.readouterr().out == dumps_algebra(construct("H_1"))
    path = tmp_path / "h1.json"
    assert main(["construct", "H_1", "-o", str(path), "--json"]) == EXIT_OK
    assert read_algebra(path) == construct("H_1")
    assert _json(capsys)["results"]["out"] == str(path)


def test_recognize(capsys):
    assert main(["recognize", "H(1,0)+A(1|0)", "--json"]) == EXIT_OK
    assert _json(capsys)["results"]["descriptor"]["label"] == "H(1,0)+A(1|0)"


@pytest.mark.parametrize(
    "tag, code",
    [("H(1,0)", EXIT_OK), ("A(0|1)", EXIT_OK), ("H(0,1)", EXIT_NOT_CAPABLE), ("H(2,0)", EXIT_NOT_CAPABLE), ("cover_of_H1", EXIT_UNDECIDED)],
)
def test_capable_exit_codes(tag, code, capsys):
    assert main(["capable", tag]) == code
    assert "verdict:" in capsys.readouterr().out


def test_capable_with_the_oracle(capsys):
    assert main(["capable", "H(0,1)", "--oracle", "--json"]) == EXIT_NOT_CAPABLE
    assert _json(capsys)["comparison"]["agrees"] is True


def test_oracle_limit_exit_code(capsys):
    assert main(["capable", "H(1,0)", "--oracle", "--limit-dim", "2"]) == EXIT_LIMIT
    assert capsys.readouterr().out == ""


def test_formula_commands(capsys):
    assert main(["multiplier", "H_1", "--oracle", "--json"]) == EXIT_OK
    assert _json(capsys)["comparison"]["match"] is True
    assert main(["extsq", "H(1,0)", "--oracle", "--class-bound", "3", "--json"]) == EXIT_OK
    assert _json(capsys)["comparison"]["oracle"] == "(3|0)"
    assert main(["corank", "H(0,1)+A(1|0)", "--json"]) == EXIT_OK
    assert _json(capsys)["results"]["formula"]["value"] == 3


def test_unknown_tag_is_an_input_error(capsys):
    assert main(["multiplier", "B(1|0)"]) == EXIT_INPUT
    assert main(["validate", "does/not/exist.json"]) == EXIT_INPUT
    assert capsys.readouterr().out == ""


def test_table(capsys):
    assert main(["table", "2", "--json"]) == EXIT_OK
    labels = [e["label"] for e in _json(capsys)["results"]["entries"]]
    assert labels == ["H(1,0)+A(1|0)", "H(0,1)", "H(1,0)+A(0|1)"]
    assert main(["table", "7"]) == EXIT_INPUT


def test_oracle_on_a_presentation_file(capsys):
    assert main(["oracle", "multiplier", data_path("h1.yaml")]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("command: oracle multiplier\ninput: sha256:")
    assert "superdim: (1|1)" in out
    assert main(["oracle", "multiplier", data_path("h1.yaml"), "--class-bound", "2"]) == EXIT_CHECK


def test_oracle_input_errors(capsys):
    assert main(["oracle", "epicenter", data_path("bad_relator.yaml")]) == EXIT_INPUT
    assert main(["oracle", "extsq", "missing.yaml"]) == EXIT_INPUT
    assert capsys.readouterr().out == ""


def test_json_output_is_deterministic(capsys):
    main(["capable", "H_1", "--json"])
    first = capsys.readouterr().out
    main(["capable", "H_1", "--json"])
    assert capsys.readouterr().out == first
