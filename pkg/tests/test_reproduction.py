from types import SimpleNamespace

import pytest

from core.algebra import SuperDim
from core.reproduction import (
    FAIL,
    KNOWN_DIVERGENT,
    PASS,
    Settings,
    catalog_grid,
    passed,
    plan,
    reproduce,
    run_checks,
    run_job,
)


def test_catalog_grid():
    grid = catalog_grid(3)
    assert grid[:9] == ["A(1|0)", "A(0|1)", "A(2|0)", "A(1|1)", "A(0|2)", "A(3|0)", "A(2|1)", "A(1|2)", "A(0|3)"]
    assert grid[9:] == ["H(0,1)", "H(0,1)+A(1|0)", "H(0,1)+A(0|1)", "H(0,2)", "H(1,0)", "H_1"]


def test_plan():
    jobs = plan(Settings(oracle_dim_ceiling=3, corank_min=0, corank_max=2))
    assert jobs[:2] == [("hopf_h1", ()), ("direct_sum_reading", ())]
    assert ("grid", ("H_1", True)) in jobs
    assert [args for kind, args in jobs if kind == "corank_table"] == [(k,) for k in range(5)]
    assert [args for kind, args in jobs if kind == "arbitrary_corank"] == [(0, 3), (1, 3), (2, 3)]


def test_hopf_h1_job():
    checks = run_job(("hopf_h1", ()))
    assert [c.status for c in checks] == [PASS, PASS]


def test_direct_sum_reading_is_flagged():
    (check,) = run_job(("direct_sum_reading", ()))
    assert check.status == KNOWN_DIVERGENT
    assert check.actual == "(0|1)"
    assert "oracle (0|1)" in check.detail


def test_direct_sum_reading_fails_when_the_oracle_disagrees(monkeypatch):
    monkeypatch.setattr("core.reproduction.hopf_multiplier", lambda *args, **kwargs: SimpleNamespace(superdim=SuperDim(1, 1)))
    (check,) = run_job(("direct_sum_reading", ()))
    assert check.status == FAIL
    assert check.expected == "(0|1)"
    assert check.actual == "(1|1)"


def test_grid_and_capability_jobs():
    checks = run_checks([("grid", ("H_1", True)), ("capability", ("H(0,1)", False)), ("capability", ("H(1,0)", True))])
    assert [c.status for c in checks] == [PASS] * 6


def test_arbitrary_corank_above_the_ceiling_uses_formulas():
    checks = run_job(("arbitrary_corank", (9, 7)))
    assert [c.status for c in checks] == [PASS, PASS]
    assert checks[0].detail == "formula only"


def test_failing_jobs_are_reported():
    (check,) = run_job(("grid", ("B(1|0)", True)))
    assert check.status == FAIL
    assert check.detail.startswith("InputError")


@pytest.mark.slow
def test_corank_table_job():
    checks = run_job(("corank_table", (4,)))
    statuses = {c.name: c.status for c in checks}
    unlisted = ["H(1,1)", "H(1,0)+A(2|1)", "H(1,0)+A(1|2)", "H(1,0)+A(0|3)", "H(0,2)+A(1|0)", "H(0,2)+A(0|1)"]
    assert statuses["H_1+A(2|0)"] == KNOWN_DIVERGENT
    assert all(statuses[label] == KNOWN_DIVERGENT for label in unlisted)
    assert statuses["L_{5,0}"] == PASS
    assert all(c.status == PASS for c in checks if c.name not in ["H_1+A(2|0)", *unlisted])
    details = {c.name: c.detail for c in checks}
    assert details["H(1,1)"] == "missing from the published list; formula 4; oracle 4"
    assert details["H_1+A(2|0)"] == "listed 4; formula 5; oracle 5"


@pytest.mark.slow
def test_corank_table_job_flags_unlisted_algebras_at_low_corank():
    checks = run_checks([("corank_table", (2,)), ("corank_table", (3,))])
    flagged = [c.name for c in checks if c.status == KNOWN_DIVERGENT]
    assert flagged == ["H(1,0)+A(0|1)", "H(1,0)+A(1|1)", "H(1,0)+A(0|2)"]
    assert all(c.status in (PASS, KNOWN_DIVERGENT) for c in checks)


@pytest.mark.slow
def test_reproduce():
    report = reproduce(Settings(jobs=1, oracle_dim_ceiling=3, corank_min=0, corank_max=2, verify_stability=False))
    assert passed(report)
    summary = report.results["summary"]
    assert summary[FAIL] == 0
    assert summary[KNOWN_DIVERGENT] == 11


@pytest.mark.slow
def test_reproduce_with_default_settings():
    report = reproduce(Settings())
    assert passed(report)
    assert report.results["summary"] == {PASS: 424, FAIL: 0, KNOWN_DIVERGENT: 11}
