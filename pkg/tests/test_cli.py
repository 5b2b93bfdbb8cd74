import json

import pytest

from zdb.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_sigma_one(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "eval", "--sigma", "1.0", "--logT", "100")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["t_range"] == "R2"
    assert rows[0]["widest_zero_free_region"] == "intermediate"
    lo = float(rows[0]["simple_bound_lo"])
    assert 2.3e46 < lo < 2.4e46


def test_eval_base_height_uses_first_range(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "eval", "--sigma", "0.98", "--logT", "28.73")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["t_range"].startswith("R1")


def test_eval_domain_violation_exit_2(capsys):
    code, _, err = run_cli(capsys, "eval", "--sigma", "0.5", "--logT", "100")
    assert code == 2
    assert "sigma" in err


def test_verify_exact_subset_exit_0(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "verify", "--checks", "L26,L02")
    assert code == 0
    records = json.loads(out)
    assert [r["id"] for r in records] == ["L02", "L26"]
    assert all(r["verdict"] == "PASS" for r in records)


def test_verify_unknown_check_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--checks", "NOPE")
    assert code == 2


def test_verify_fail_exit_1(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "verify", "--checks", "L25")
    assert code == 1
    rec = json.loads(out)[0]
    assert rec["verdict"] == "FAIL"
    assert "0.45" in rec["computed_lo"] or rec["computed_lo"].startswith("4.4999")


def test_verify_starved_exit_3(capsys):
    code, _, _ = run_cli(
        capsys, "--max-subdivisions", "1", "verify", "--checks", "L03"
    )
    assert code == 3


def test_crossover_no_crossover_rows(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "crossover", "--C", "1", "--scan", "28:29:2")
    assert code == 0
    assert out.count("NO_CROSSOVER") >= 2


def test_crossover_bracket_row(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "csv", "crossover", "--C", "1", "--scan", "6.6e12:6.7e12:2"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1].endswith("no")
    assert lines[2].endswith("yes")


def test_crossover_reversed_range_exit_2(capsys):
    code, _, _ = run_cli(capsys, "crossover", "--C", "1", "--scan", "29:28:2")
    assert code == 2


def test_regions_scan(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "regions", "--scan", "40:1000000:3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1].endswith("classical")
    assert lines[3].endswith("korobov-vinogradov")


def test_regions_boundary_inconclusive_allowed(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "regions", "--scan", "481958:481958:1")
    assert code == 0
    assert out.strip().splitlines()[1].split(",")[-1] in (
        "littlewood", "korobov-vinogradov", "INCONCLUSIVE",
    )


def test_table_flags_third_term(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "table")
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("third-term")]
    assert rows and rows[0].endswith("DISCREPANCY")
    leading = [line for line in out.splitlines() if line.startswith("simple-form")]
    assert len(leading) == 4 and all(line.endswith("ok") for line in leading)


def test_byte_identical_output(capsys):
    _, out1, _ = run_cli(capsys, "--format", "json", "verify", "--checks", "L02,L26,L30")
    _, out2, _ = run_cli(capsys, "--format", "json", "verify", "--checks", "L02,L26,L30")
    assert out1 == out2


def test_precision_bits_env_override(capsys, monkeypatch):
    monkeypatch.setenv("ZDB_PRECISION_BITS", "160")
    code, out, _ = run_cli(capsys, "--format", "json", "verify", "--checks", "L02")
    assert code == 0
    monkeypatch.delenv("ZDB_PRECISION_BITS")


def test_bad_precision_exit_2(capsys):
    code, _, _ = run_cli(capsys, "--precision-bits", "10", "verify", "--checks", "L02")
    assert code == 2
