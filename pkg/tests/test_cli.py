import json
import math

import pytest

from orlicz_lab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_power(capsys):
    code, out, _ = run_cli(capsys, "classify", "--function", '{"family":"power","p":2}',
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "compact"


def test_classify_counterexample_shorthand(capsys):
    code, out, _ = run_cli(capsys, "classify", "--function", "paper_counterexample:4",
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["verdict"] == "weakly_compact_not_compact"


def test_classify_exp_minus_one(capsys):
    code, out, _ = run_cli(capsys, "classify", "--function", '{"family":"exp_minus_one"}',
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["verdict"] == "not_weakly_compact"


def test_classify_csv(capsys):
    code, out, _ = run_cli(capsys, "classify", "--function", "power:2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "a,log_x,ratio_log"
    assert len(lines) > 4


def test_norm_bergman_monomial(capsys):
    code, out, _ = run_cli(capsys, "norm", "--space", "bergman", "--function", "power:2",
                           "--input", "monomial:1", "--format", "text")
    assert code == 0
    assert abs(float(out.strip().splitlines()[0]) - 1.0 / math.sqrt(2.0)) < 1e-8


def test_norm_hardy_constant(capsys):
    code, out, _ = run_cli(capsys, "norm", "--space", "hardy", "--function", "power:2",
                           "--input", "const:3", "--format", "text")
    assert code == 0
    assert abs(float(out.strip().splitlines()[0]) - 3.0) < 1e-7


def test_norm_kernel_lower_bound(capsys):
    code, out, _ = run_cli(capsys, "norm", "--space", "bergman", "--function", "power:2",
                           "--input", "kernel_squared:h=0.03125", "--format", "text")
    assert code == 0
    assert float(out.strip().splitlines()[0]) >= 1.0 / (9.0 * 32.0) - 1e-6


def test_norm_json_result(capsys):
    code, out, _ = run_cli(capsys, "norm", "--space", "circle", "--function", "power:2",
                           "--input", "monomial:3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["converged"]
    assert abs(payload["value"] - 1.0) < 1e-8


def test_verify_counterexample(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "counterexample", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["overall_pass"]


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "bogus")
    assert code == 64
    assert "unknown suite" in err


def test_malformed_function_spec(capsys):
    code, _, err = run_cli(capsys, "classify", "--function", '{"family":"wat"}')
    assert code == 64
    assert "unknown function family" in err


def test_missing_subcommand(capsys):
    assert main([]) == 64


def test_output_file_atomic(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _, _ = run_cli(capsys, "classify", "--function", "power:2",
                         "--format", "json", "--output", str(out_path))
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["verdict"] == "compact"


def test_seed_determinism(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    for p in (p1, p2):
        code, _, _ = run_cli(capsys, "verify", "--suite", "evaluation", "--seed", "11",
                             "--format", "json", "--output", str(p))
        assert code == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_report_command(capsys):
    code, out, _ = run_cli(capsys, "report", "--function", "power:2", "--format", "json")
    payload = json.loads(out)
    assert payload["classification"]["verdict"] == "compact"
    assert len(payload["suites"]) == 7
    assert payload["all_suites_pass"]
    assert code == 0


def test_verify_kernel_custom_h(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "kernel", "--h", "0.0078125",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["overall_pass"]
    assert payload[0]["config"]["h_grid"] == [0.0078125]


def test_verify_h_flag_guarded(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "monomial", "--h", "0.5")
    assert code == 64
