import json
import subprocess
import sys

import pytest

from k3a5.driver import (SELECTORS, CheckRecord, UsageError, VerificationReport, main,
                         parse_report, render_report, run_suite)


def test_prop1_4_suite_passes():
    report = run_suite("prop1_4")
    ids = [c.id for c in report.checks]
    assert ids == sorted(ids)
    sols = [c for c in report.checks if c.id.startswith("prop1_4.solutions")]
    assert len(sols) == 3 and all(c.status == "pass" for c in sols)
    assert report.ok


def test_all_suite():
    report = run_suite("all")
    assert len(report.checks) >= 20
    assert report.summary["fail"] == 0
    flagged = [c for c in report.checks if c.status == "flagged"]
    assert [c.id for c in flagged] == ["lemma1_8.orbit_sizes"]
    assert "60" in flagged[0].computed and flagged[0].note


def test_unknown_selector():
    with pytest.raises(UsageError):
        run_suite("foo")
    assert main(["foo"]) == 2
    assert main([]) == 2


def test_empty_report():
    r = VerificationReport.build([])
    data = json.loads(render_report(r, "structured"))
    assert data["summary"] == {"pass": 0, "fail": 0, "flagged": 0}
    assert data["checks"] == []


def test_round_trip_and_determinism():
    for sel in ("lemma1_8", "prop2_2"):
        r = run_suite(sel)
        blob = render_report(r, "structured")
        assert parse_report(blob) == r
        assert render_report(run_suite(sel), "structured") == blob
        assert render_report(r, "text") == render_report(run_suite(sel), "text")


def test_record_invariants():
    with pytest.raises(ValueError):
        CheckRecord("x", "here", "1", "2", "pass")
    with pytest.raises(ValueError):
        CheckRecord("x", "here", "1", "2", "flagged")
    with pytest.raises(ValueError):
        CheckRecord("x", "here", "1", "1", "maybe")


def test_exit_code_tracks_failures():
    bad = VerificationReport.build([CheckRecord("a", "b", "1", "2", "fail")])
    assert not bad.ok
    flagged = VerificationReport.build([CheckRecord("a", "b", "1", "2", "flagged", "known")])
    assert flagged.ok


def test_cli_writes_file(tmp_path):
    out = tmp_path / "r.json"
    assert main(["lemma1_6", "--format", "structured", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["summary"]["pass"] == len(data["checks"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "k3a5", "obstruction"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "0 failed" in proc.stdout


def test_selectors_listed():
    assert set(SELECTORS) == {"prop1_4", "lemma1_6", "lemma1_8", "prop2_2", "prop3_2_arith",
                              "section3", "obstruction", "all"}
