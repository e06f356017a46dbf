"""Command-line behavior: formats, schemas, exit codes, determinism."""

import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest

from qmetallic import CheckResult
from qmetallic import cli

SCHEMA_DIR = pathlib.Path(__file__).resolve().parent.parent / "schemas"
SCHEMAS = {
    p.stem: json.loads(p.read_text()) for p in SCHEMA_DIR.glob("*.json")
}


def run(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:  # argparse's own usage failures
        code = exc.code if isinstance(exc.code, int) else 2
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(argv, schema, capsys):
    code, out, err = run(argv + ["--format", "json"], capsys)
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMAS[schema])
    return code, payload, err


def test_shipped_schemas_cover_every_subcommand():
    assert set(SCHEMAS) == {"series", "hfrac", "hankel", "verify", "modp", "scan"}


# --- series ------------------------------------------------------------


def test_series_text(capsys):
    code, out, _ = run(["series", "--n", "1", "--prec", "16"], capsys)
    assert code == 0
    assert out.startswith("1 + q^2 - q^3 + 2q^4")


def test_series_json(capsys):
    code, payload, _ = run_json(["series", "--n", "2", "--prec", "23"], "series", capsys)
    assert code == 0
    assert payload["n"] == 2 and payload["prec"] == 23
    assert payload["coefficients"][:8] == [1, 1, 0, 0, 1, 0, -2, 1]


def test_series_csv(capsys):
    code, out, _ = run(["series", "--n", "1", "--prec", "1", "--format", "csv"], capsys)
    assert code == 0
    assert out == "n,j,coefficient\n1,0,1\n"


def test_series_env_precision(capsys, monkeypatch):
    monkeypatch.setenv("HM_DEFAULT_PRECISION", "5")
    code, payload, _ = run_json(["series", "--n", "1"], "series", capsys)
    assert code == 0 and payload["prec"] == 5 and len(payload["coefficients"]) == 5


def test_series_env_precision_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv("HM_DEFAULT_PRECISION", "soon")
    code, _, err = run(["series", "--n", "1"], capsys)
    assert code == 2
    assert "HM_DEFAULT_PRECISION must be an integer" in err


# --- hfrac -------------------------------------------------------------


def test_hfrac_json_26_cycle(capsys):
    code, payload, _ = run_json(["hfrac", "--n", "5"], "hfrac", capsys)
    assert code == 0
    assert payload["period"] == 26 and payload["offset"] == 1
    assert payload["delta"] == 2
    assert payload["head"] == {"k": 0, "a": -1, "v": 1, "D": [1, -1]}
    for t in [payload["head"]] + payload["preamble"] + payload["cycle"]:
        assert t["a"] == -t["v"]


def test_hfrac_json_3_cycle(capsys):
    code, payload, _ = run_json(["hfrac", "--n", "1"], "hfrac", capsys)
    assert code == 0 and payload["period"] == 3
    assert payload["cycle"][1] == {"k": 1, "a": 1, "v": -1, "D": [1, 1, -1]}


def test_hfrac_shifted(capsys):
    code, payload, _ = run_json(["hfrac", "--n", "5", "--ell", "5"], "hfrac", capsys)
    assert code == 0 and payload["period"] == 26
    assert payload["head"]["D"][:6] == [1, 0, 1, 1, 1, 2]


def test_hfrac_text(capsys):
    code, out, _ = run(["hfrac", "--n", "1", "--format", "text"], capsys)
    assert code == 0
    assert "head: (1)/(1)" in out and "cycle of 3 terms" in out


def test_hfrac_csv(capsys):
    code, out, _ = run(["hfrac", "--n", "2", "--format", "csv"], capsys)
    assert code == 0
    assert out.splitlines()[1] == "2,0,0,head,0,1,1 - q"


def test_hfrac_shift_out_of_range(capsys):
    code, _, err = run(["hfrac", "--n", "3", "--ell", "9"], capsys)
    assert code == 2 and "--ell 0..4" in err


# --- hankel ------------------------------------------------------------


def test_hankel_csv_quotes_negative_cells(capsys):
    code, out, _ = run(
        ["hankel", "--n", "1", "--ell", "2", "--horizon", "8", "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,ell,j,delta,source"
    assert lines[5] == '1,2,4,"-1",both'


def test_hankel_json_dual_route(capsys):
    code, payload, _ = run_json(
        ["hankel", "--n", "5", "--horizon", "60", "--source", "both"], "hankel", capsys
    )
    assert code == 0
    assert len(payload["values"]) == 60
    assert payload["checks"][0]["pass"] is True


def test_hankel_zero_horizon_is_header_only(capsys):
    code, out, _ = run(["hankel", "--n", "3", "--horizon", "0", "--format", "csv"], capsys)
    assert code == 0 and out == "n,ell,j,delta,source\n"


def test_hankel_formula_needs_proved_shift(capsys):
    code, _, err = run(["hankel", "--n", "2", "--ell", "6", "--source", "formula"], capsys)
    assert code == 2 and "--ell <= 3" in err


def test_hankel_brute_reaches_any_shift(capsys):
    code, payload, _ = run_json(
        ["hankel", "--n", "2", "--ell", "6", "--horizon", "5", "--source", "brute"],
        "hankel",
        capsys,
    )
    assert code == 0 and payload["source"] == "brute_force"


# --- verify ------------------------------------------------------------


def test_verify_suite_json(capsys):
    code, payload, _ = run_json(["verify", "--suite", "thmA", "--n", "1..4"], "verify", capsys)
    assert code == 0 and payload["pass"] is True and len(payload["checks"]) == 4


def test_verify_text_lines(capsys):
    code, out, _ = run(["verify", "--suite", "thmC", "--n", "1"], capsys)
    assert code == 0 and out.count("PASS gale_robinson") == 3


def test_verify_rejects_unknown_suite(capsys):
    code, _, _ = run(["verify", "--suite", "nope", "--n", "1"], capsys)
    assert code == 2


def test_verify_rejects_backwards_range(capsys):
    code, _, err = run(["verify", "--n", "6..3"], capsys)
    assert code == 2


def test_verify_reports_failures_with_exit_1(capsys, monkeypatch):
    stub = [CheckResult("stub_check", False, (0, 1, -1), "forced")]
    monkeypatch.setattr(cli, "run_suite", lambda suite, ns: stub)
    code, payload, _ = run_json(["verify", "--suite", "thmA", "--n", "3"], "verify", capsys)
    assert code == 1
    assert payload["pass"] is False
    assert payload["checks"][0]["counterexample"] == {"j": 0, "expected": 1, "got": -1}


# --- modp --------------------------------------------------------------


def test_modp_json(capsys):
    code, payload, _ = run_json(["modp", "--n", "3", "--ell", "0", "--p", "2"], "modp", capsys)
    assert code == 0
    assert payload["conclusive"] is True and payload["hfraction_period"] is not None


def test_modp_requires_prime(capsys):
    code, _, err = run(["modp", "--n", "3", "--p", "4"], capsys)
    assert code == 2 and "prime" in err


def test_modp_text(capsys):
    code, out, _ = run(["modp", "--n", "3", "--p", "5", "--format", "text"], capsys)
    assert code == 0 and "fraction stream" in out


# --- scan --------------------------------------------------------------


def test_scan_json(capsys):
    code, payload, _ = run_json(
        ["scan", "--n", "3", "--ell", "5", "--horizon", "48"], "scan", capsys
    )
    assert code == 0
    assert payload["label"] == "exploratory"
    assert payload["value_min"] >= -2 and payload["value_max"] <= 2


def test_scan_refuses_settled_shifts(capsys):
    code, _, _ = run(["scan", "--n", "3", "--ell", "2"], capsys)
    assert code == 2


def test_scan_text_defaults(capsys):
    code, out, _ = run(["scan", "--n", "3", "--format", "text"], capsys)
    assert code == 0 and "exploratory" in out


# --- cross-cutting -------------------------------------------------------


def test_output_is_deterministic(capsys):
    args = ["hankel", "--n", "2", "--horizon", "24", "--format", "json"]
    _, first, _ = run(args, capsys)
    _, second, _ = run(args, capsys)
    assert first == second


def test_out_flag_writes_the_file(capsys, tmp_path):
    target = tmp_path / "payload.json"
    code, out, _ = run(
        ["series", "--n", "1", "--prec", "4", "--format", "json", "--out", str(target)],
        capsys,
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["n"] == 1


def test_console_script_runs():
    r = subprocess.run(
        ["qmetallic", "series", "--n", "1", "--prec", "3"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0 and "1 + q^2" in r.stdout


def test_missing_required_argument_exits_2():
    r = subprocess.run(
        [sys.executable, "-m", "qmetallic.cli", "series"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 2
