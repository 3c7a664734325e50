import json

import pytest

from conftest import data_path
from core import citations
from core.algebra import write_algebra
from core.catalog import construct
from core.errors import InputError
from core.pipeline import (
    analyze_algebra,
    capability_report,
    corank_report,
    exterior_square_report,
    load_algebra,
    load_presentation,
    multiplier_report,
    oracle_report,
    recognition_report,
    table_report,
    validation_report,
)
from core.reports import Report, digest


def test_digest():
    assert digest("abc") == "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
    assert digest(b"abc") == digest("abc")


def test_report_renderings():
    report = Report(command="x", results={"b": True, "a": None, "c": {"d": 1}, "e": []}, comparison={"match": False})
    assert report.to_text() == "command: x\na: -\nb: true\nc:\n  d: 1\ne: []\ncomparison:\n  match: false\n"
    assert json.loads(report.to_json())["results"]["c"] == {"d": 1}
    assert report.to_json() == Report(**json.loads(report.to_json())).to_json()


def test_load_algebra_from_tag_and_file(tmp_path, h10):
    L, source = load_algebra("H(1,0)")
    assert L == h10
    assert source == digest("H(1,0)")
    path = tmp_path / "h10.json"
    write_algebra(h10, path)
    L, source = load_algebra(str(path))
    assert L == h10
    assert source == digest(path.read_bytes())


def test_load_presentation():
    presentation, source = load_presentation(data_path("h1.yaml"))
    assert presentation.class_bound == 3
    assert source.startswith("sha256:")


def test_validation_report(h10, jacobi_breaker):
    results = validation_report(h10).results
    assert results["validation"]["ok"] is True
    assert results["nilpotency_class"] == 2
    results = validation_report(jacobi_breaker).results
    assert results["validation"]["ok"] is False
    assert "nilpotency_class" not in results


def test_recognition_report():
    results = recognition_report(construct("H(1,0)+A(1|0)")).results
    assert results["descriptor"]["label"] == "H(1,0)+A(1|0)"
    assert results["descriptor"]["params"] == {"m": 1, "n": 0, "r": 1, "s": 0}


def test_multiplier_report_with_oracle(h1, limits):
    report = multiplier_report(h1, oracle=True, limits=limits)
    assert report.results["formula"]["value"] == "(1|1)"
    assert report.results["bound"]["value"] == 5
    assert report.comparison == {"formula": "(1|1)", "oracle": "(1|1)", "match": True}


def test_reports_state_the_results_they_cite(h1):
    report = multiplier_report(h1)
    assert report.references == {
        citations.MULTIPLIER_BOUND: citations.STATEMENTS[citations.MULTIPLIER_BOUND],
        citations.ODD_HEISENBERG_MULTIPLIER: citations.STATEMENTS[citations.ODD_HEISENBERG_MULTIPLIER],
    }
    assert "references:\n  multiplier-bound: dim M(L) <= " in report.to_text()
    assert json.loads(report.to_json())["references"] == report.references
    report, _ = capability_report(construct("H(2,0)"))
    assert {citations.EVEN_HEISENBERG_CAPABILITY, citations.CENTRAL_QUOTIENT_CRITERION} <= set(report.references)
    assert Report(command="x", results={"kind": citations.UNRECOGNIZED}).references == {}


def test_every_citation_has_a_statement():
    slugs = {value for name, value in vars(citations).items() if name.isupper() and isinstance(value, str)}
    assert slugs == set(citations.STATEMENTS)


def test_multiplier_report_without_a_formula(limits):
    report = multiplier_report(construct("cover_of_H1"), oracle=True, limits=limits)
    assert report.results["formula"] is None
    assert report.comparison["match"] is None


def test_exterior_square_report(h10, limits):
    report = exterior_square_report(h10, oracle=True, limits=limits)
    assert report.results["derived_superdim"] == "(1|0)"
    assert report.comparison["match"] is True
    assert report.comparison["oracle"] == "(3|0)"


def test_corank_report(limits):
    report = corank_report(construct("H(0,1)+A(1|0)"), oracle=True, limits=limits)
    assert report.results["formula"]["value"] == 3
    assert report.comparison == {"formula": 3, "oracle": 3, "match": True}


def test_capability_report(h01, limits):
    report, verdict = capability_report(construct("H(2,0)"))
    assert verdict.status.value == "not_capable"
    assert report.results["central_quotient"]["status"] == "not_capable"
    assert report.comparison is None
    report, verdict = capability_report(h01, oracle=True, limits=limits)
    assert report.comparison == {"table": "not_capable", "oracle": "not_capable", "agrees": True}
    assert verdict.justification == "hopf-oracle"


def test_capability_report_for_abelian_algebras_skips_the_criterion():
    report, verdict = capability_report(construct("A(2|0)"))
    assert verdict.status.value == "capable"
    assert "central_quotient" not in report.results


def test_table_report():
    report = table_report(3)
    entries = report.results["entries"]
    assert len(entries) == 7
    assert [e["label"] for e in entries if not e["published"]] == ["H(1,0)+A(1|1)", "H(1,0)+A(0|2)"]
    assert {e["corank"] for e in entries} == {3}
    assert entries[0]["superdim"] == "(5|0)"


def test_oracle_report(limits):
    presentation, source = load_presentation(data_path("h1.yaml"))
    report = oracle_report("multiplier", presentation, limits, source)
    assert report.command == "oracle multiplier"
    assert report.results["superdim"] == "(1|1)"
    assert report.results["generators"] == [{"name": "x", "parity": "even"}, {"name": "y", "parity": "odd"}]
    with pytest.raises(InputError):
        oracle_report("center", presentation, limits)


def test_analyze_algebra(jacobi_breaker, limits):
    out = analyze_algebra(construct("H_1"), oracle=True, limits=limits)
    assert out["descriptor"]["label"] == "H_1"
    assert out["multiplier"]["value"] == "(1|1)"
    assert out["exterior_square"]["value"] == "(1|2)"
    assert out["capability_comparison"]["agrees"] is True
    broken = analyze_algebra(jacobi_breaker)
    assert broken["validation"]["ok"] is False
    assert "descriptor" not in broken
