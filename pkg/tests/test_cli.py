"""Tests for the command-line interface: reports, exit codes, error paths."""

import json

import pytest

from ilvseq import ShiftSequence, all_passed, run_all
from ilvseq.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_report(out):
    report = json.loads(out)
    assert report["schema"] == "1"
    assert "timing" in report and report["timing"]["seconds"] >= 0
    return report


def test_gen_mseq(capsys):
    code, out, err = run_cli(
        capsys, "gen", "mseq", "--degree", "3", "--poly", "1011", "--state", "100"
    )
    assert code == 0
    report = parse_report(out)
    assert report["results"]["sequence"] == "1001011"
    assert report["results"]["two_level"] is True


def test_gen_legendre_pretty(capsys):
    code, out, err = run_cli(capsys, "gen", "legendre", "--v", "7", "--pretty")
    assert code == 0
    assert parse_report(out)["results"]["sequence"] == "0110100"
    assert "two-level: True" in err


def test_gen_bad_input_exits_2(capsys):
    code, out, err = run_cli(capsys, "gen", "legendre", "--v", "8")
    assert code == 2
    assert "error:" in err


def test_correlate_auto(capsys):
    code, out, err = run_cli(capsys, "correlate", "--a", "1001110", "--auto")
    assert code == 0
    report = parse_report(out)
    assert report["results"]["profile"]["values"] == [7, -1, -1, -1, -1, -1, -1]
    assert report["results"]["two_level"] is True


def test_correlate_pair_fast_matches_direct(capsys):
    args = ["correlate", "--a", "1001110", "--b", "1001011"]
    _, direct_out, _ = run_cli(capsys, *args)
    _, fast_out, _ = run_cli(capsys, *args, "--fast")
    direct = parse_report(direct_out)["results"]["profile"]["values"]
    fast = parse_report(fast_out)["results"]["profile"]["values"]
    assert direct == fast


def test_correlate_requires_partner(capsys):
    code, _, err = run_cli(capsys, "correlate", "--a", "1001110")
    assert code == 2
    assert "provide --b or --auto" in err
    code, _, err = run_cli(capsys, "correlate", "--a", "10", "--b", "01", "--auto")
    assert code == 2


def test_build_with_delta(capsys):
    code, out, err = run_cli(
        capsys,
        "build",
        "--a", "1001110",
        "--b", "1001011",
        "--e", "0,0,1,0,6,3,5",
        "--delta",
    )
    assert code == 0
    results = parse_report(out)["results"]
    assert results["member_count"] == 8
    assert results["period"] == 49
    assert results["delta"]["delta"] == 17
    assert len(results["delta"]["witnesses"]) == 80
    assert results["notes"] == []


def test_build_warns_on_advisory_notes(capsys):
    code, out, err = run_cli(
        capsys,
        "build",
        "--a", "1001110",
        "--b", "1001110",
        "--e", "0,0,1,0,6,3,5",
    )
    assert code == 0
    assert "warning: b is a shift of a" in err


def test_check_verdict_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "check", "--e", "0,0,1,0,6,3,5", "--cond", "A")
    assert code == 1
    results = parse_report(out)["results"]
    assert results["verdict"] is False
    assert results["first_failure_s"] == 1
    assert results["per_s"][0]["values"] == [0, 6, 1, 1, 3, 5]

    code, out, _ = run_cli(capsys, "check", "--e", "0,0,1,0,6,3,5", "--cond", "B")
    assert code == 0
    assert parse_report(out)["results"]["verdict"] is True


def test_check_rejects_infinite_vector(capsys):
    code, _, err = run_cli(capsys, "check", "--e", "0,inf,1", "--cond", "A")
    assert code == 2
    assert "finite" in err


def test_search_counts(capsys):
    code, out, _ = run_cli(capsys, "search", "--v", "3", "--pred", "A")
    assert code == 0
    results = parse_report(out)["results"]
    assert results["satisfying"] == 6
    assert results["examined"] == 9
    assert results["exhaustive"] is True
    assert results["strategy"] == "full"


def test_search_witnesses_and_backtrack(capsys):
    code, out, _ = run_cli(
        capsys,
        "search", "--v", "7", "--pred", "b-not-a",
        "--limit", "1", "--strategy", "backtrack",
    )
    assert code == 0
    results = parse_report(out)["results"]
    assert results["witnesses"] == ["0,0,0,1,0,2,3"]
    assert results["exhaustive"] is False


def test_search_budget_exit_3(capsys):
    code, _, err = run_cli(capsys, "search", "--v", "9", "--pred", "open")
    assert code == 3
    assert "budget" in err


def test_search_sample(capsys):
    code, out, _ = run_cli(
        capsys,
        "search", "--v", "12", "--pred", "B",
        "--sample", "50", "--seed", "7", "--limit", "3",
    )
    assert code == 0
    results = parse_report(out)["results"]
    assert results["strategy"] == "sample"
    assert results["examined"] == 50
    assert results["exhaustive"] is False


def test_verify_nonexistence(capsys):
    code, out, _ = run_cli(capsys, "verify-nonexistence", "--vmax", "4")
    assert code == 0
    results = parse_report(out)["results"]
    assert results["confirmed"] is True
    rows = {row["v"]: row for row in results["entries"]}
    assert rows[2]["exists"] is True
    assert rows[2]["witnesses"] == ["0,0", "0,1"]
    assert rows[3]["exists"] is False
    assert rows[3]["witness"] is None


def test_reproduce_text_output(capsys):
    code, out, err = run_cli(capsys, "reproduce")
    assert code == 0
    assert "12/12 checks passed" in out
    assert out.count("[PASS]") == 12
    assert "[FAIL]" not in out


def test_reproduce_json_output(capsys):
    code, out, err = run_cli(capsys, "reproduce", "--json")
    assert code == 0
    report = parse_report(out)
    assert report["results"]["all_passed"] is True
    assert len(report["results"]["checks"]) == 12
    assert "12/12 checks passed" in err


def test_usage_error_exit_code(capsys):
    assert run_cli(capsys, "no-such-command")[0] == 2
    assert run_cli(capsys, "check", "--e", "0,1", "--cond", "Z")[0] == 2
    assert run_cli(capsys, "--help")[0] == 0


def test_reproduction_negative_control():
    # A corrupted shift vector must fail at least one reproduction check.
    results = run_all(example_e=ShiftSequence((0, 1, 2, 3, 4, 5, 6)))
    assert not all_passed(results)
    failed = [r.name for r in results if not r.passed]
    assert failed
