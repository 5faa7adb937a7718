import json

import pytest

from sierpdom import harness
from sierpdom.harness import RunConfig, exit_code, parse_range, render, run_all, strip_timing, summary_json, table, verify


def test_parse_range():
    assert parse_range("3..7") == [3, 4, 5, 6, 7]
    assert parse_range("1,2,4") == [1, 2, 4]
    assert parse_range(5) == [5]
    assert parse_range("1..2,5") == [1, 2, 5]
    with pytest.raises(ValueError):
        parse_range("")


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(cap=0)
    with pytest.raises(ValueError):
        RunConfig(format="xml")
    with pytest.raises(ValueError):
        RunConfig(budget=0)
    assert RunConfig(seed=3).to_dict()["seed"] == 3


def test_verify_3k_dom():
    check = verify("3k-dom", {"n": "3..7", "k": "1..2"})
    assert check.verdict == "pass"
    assert all(r["value"] == [r["k"] * r["n"]] * 2 for r in check.rows)
    assert len(check.rows) == 10


def test_verify_main2_formula():
    check = verify("main-2", {"n": "3..6", "k": "1", "p": "0,1,2"})
    assert check.verdict == "pass" and len(check.rows) == 12


def test_verify_elementary_seeded():
    check = verify("elementary", {"pairs": 10, "fs": 5}, RunConfig(seed=4))
    assert check.verdict == "pass" and len(check.rows) == 10
    again = verify("elementary", {"pairs": 10, "fs": 5}, RunConfig(seed=4))
    assert [r["detail"] for r in check.rows] == [r["detail"] for r in again.rows]


def test_verify_c18c7():
    check = verify("c18c7-example")
    assert check.verdict == "pass" and check.rows[0]["value"] == 36


def test_unknown_check():
    with pytest.raises(ValueError):
        verify("nope")


def test_table_main1_annotations():
    check = table("main-1", "3..8", "1")
    cells = {(r["n"], r["p"]): (r["value"], r["detail"]["attained"]) for r in check.rows}
    assert cells[(4, 2)] == (6, "lower")
    assert cells[(3, 0)] == (3, "exact")
    assert cells[(5, 1)][0] in (5, 6)
    md = harness.render_markdown_table(check)
    assert "| 4 |" in md and "6 (lower)" in md
    with pytest.raises(ValueError):
        table("3k-dom")


def test_tiny_budget_gives_partial_not_fail():
    check = verify("3k-dom", {"n": "3..5", "k": "1..2"}, RunConfig(budget=3))
    assert check.verdict == "partial"
    assert not check.failures
    assert exit_code([check.verdict]) == 2


def test_fail_carries_repro(monkeypatch):
    monkeypatch.setattr(harness, "upper_sierpinski", lambda n, k, p: -1)
    check = verify("main-2", {"n": "3", "k": "1", "p": "0"})
    assert check.verdict == "fail"
    doc = check.to_dict()
    assert doc["repro"].startswith("sierpdom ") and "verify main-2" in doc["repro"]
    assert exit_code(["pass", "fail", "partial"]) == 1


def test_exit_codes():
    assert exit_code(["pass", "pass"]) == 0
    assert exit_code(["pass", "partial"]) == 2


def test_render_formats():
    check = verify("main-1", {"n": "3..4", "k": "1", "p": "1"})
    csv_text = render([check], "csv")
    assert csv_text.splitlines()[0] == ",".join(harness.CSV_COLUMNS)
    assert len(csv_text.splitlines()) == 3
    md = render([check], "markdown")
    assert md.startswith("## main-1: pass")
    doc = json.loads(render([check], "json"))
    assert doc["checks"][0]["id"] == "main-1"


def test_run_all_deterministic_except_timing():
    cfg = RunConfig(seed=1)
    ids = ("elementary", "main-1", "prop1-Hk", "c18c7-example")
    a = json.loads(summary_json(run_all(cfg, ids, preflight=False)))
    b = json.loads(summary_json(run_all(cfg, ids, preflight=False)))
    assert json.dumps(strip_timing(a), sort_keys=True) == json.dumps(strip_timing(b), sort_keys=True)
    assert a["seed"] == 1 and "python" in a["versions"] and "total_seconds" in a
    assert a["overall"] == "pass"


def test_run_all_tiny_budget_is_partial():
    summary = run_all(RunConfig(budget=2), ("3k-dom", "main-2"), preflight=False)
    assert summary["overall"] == "partial"
    assert "fail" not in summary["verdicts"].values()


def test_strategy_agreement_gate():
    gate = harness.strategy_agreement("3..4", "3..5")
    assert gate.verdict == "pass" and len(gate.rows) == 6
