"""CLI surface: exit codes, output formats, determinism."""

import json

import pytest

from fwcodes.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_construct_text(capsys):
    status, out, _ = run(capsys, "construct", "--p", "2", "--m1", "2",
                         "--m2", "2", "--family", "D1")
    assert status == 0
    assert "[n=9, k=4, d=4]" in out
    assert "near_griesmer" in out and "formula match: True" in out


def test_construct_json_report(capsys):
    status, out, _ = run(capsys, "construct", "--p", "2", "--m1", "2",
                         "--m2", "2", "--family", "D1", "--format", "json")
    assert status == 0
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["code"]["n"] == 9 and report["code"]["d"] == 4
    assert report["weight_distribution"]["enumerated"] == {"4": 9, "6": 6}
    assert report["weight_distribution"]["match"] is True
    assert report["projective"] is True
    assert report["griesmer"]["category"] == "near_griesmer"
    assert report["griesmer"]["distance_optimal_proved"] is True
    assert report["minimality"]["ab"] is True
    assert report["srg"]["match"] is True
    assert "timing" not in report


def test_json_output_is_deterministic(capsys):
    args = ("verify", "--p", "3", "--m1", "2", "--m2", "2",
            "--family", "D1", "--tilde", "--format", "json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_csv_output(capsys):
    status, out, _ = run(capsys, "construct", "--p", "2", "--m1", "2",
                         "--m2", "2", "--family", "D2", "--format", "csv")
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[0] == "weight,frequency"
    assert lines[1:] == ["2,3", "3,8", "4,3", "6,1"]


def test_verify_includes_naive(capsys):
    status, out, _ = run(capsys, "verify", "--p", "3", "--m1", "2",
                         "--m2", "2", "--family", "D3", "--format", "json")
    assert status == 0
    assert json.loads(out)["weight_distribution"]["naive_match"] is True


def test_tilde_flag(capsys):
    status, out, _ = run(capsys, "construct", "--p", "2", "--m1", "2", "--m2", "2",
                         "--family", "D1", "--tilde", "--format", "json")
    assert status == 0
    assert json.loads(out)["code"]["family"] == "D1_tilde"


def test_lemmas_command(capsys):
    status, out, _ = run(capsys, "lemmas", "--p", "3", "--m", "4",
                         "--format", "json")
    assert status == 0
    report = json.loads(out)["lemmas"]
    assert report["all_pass"] is True
    gauss = next(e for e in report["entries"]
                 if e["lemma_id"] == "gauss_sum_closed_form")
    assert gauss["lhs"] == [-9, 0] and gauss["equal"] is True


def test_srg_command_with_edges(tmp_path, capsys):
    edges = tmp_path / "edges.txt"
    status, out, _ = run(capsys, "srg", "--p", "2", "--m1", "2", "--m2", "2",
                         "--family", "D1", "--edges", str(edges),
                         "--format", "json")
    assert status == 0
    report = json.loads(out)
    assert report["srg"]["measured"] == {"N": 16, "K": 9, "lambda": 4, "mu": 6}
    lines = edges.read_text().strip().splitlines()
    assert len(lines) == 72
    u, v = map(int, lines[0].split())
    assert u < v


def test_srg_rejects_non_two_weight(capsys):
    status, _, err = run(capsys, "srg", "--p", "2", "--m1", "2", "--m2", "2",
                         "--family", "D2")
    assert status == 2 and "weights" in err


def test_sweep_small(capsys):
    status, out, _ = run(capsys, "sweep", "--max-size", "4096",
                         "--format", "json")
    assert status == 0
    sweep = json.loads(out)["sweep"]
    assert sweep["all_pass"] is True and sweep["num_points"] > 20


def test_usage_errors(capsys):
    assert run(capsys, "construct", "--p", "4", "--m1", "2", "--m2", "2",
               "--family", "D1")[0] == 2
    assert run(capsys, "construct", "--p", "5", "--m1", "2", "--m2", "2",
               "--family", "D3")[0] == 2  # empty defining set
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main([])


def test_out_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    status = main(["construct", "--p", "2", "--m1", "2", "--m2", "2",
                   "--family", "D1", "--format", "json", "--out", str(out_path)])
    assert status == 0
    assert json.loads(out_path.read_text())["code"]["n"] == 9


def test_timing_opt_in(capsys):
    _, out, _ = run(capsys, "construct", "--p", "2", "--m1", "2", "--m2", "2",
                    "--family", "D1", "--format", "json", "--timing")
    assert "timing" in json.loads(out)
