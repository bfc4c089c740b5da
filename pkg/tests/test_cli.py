import json
import subprocess
import sys

import jsonschema
import pytest

from alphaspec.cli import main
from alphaspec.schemafiles import load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


def test_charpoly_k2_text(capsys):
    code, out, _ = run(capsys, "charpoly", "-g", "A_")
    assert code == 0 and out.strip() == "x^2 - 2*a*x + 2*a - 1"


def test_charpoly_fixed_alpha(capsys):
    code, out, _ = run(capsys, "charpoly", "-g", "A_", "--alpha", "1/2")
    assert code == 0 and out.strip() == "x^2 - x"


def test_spectrum_c5_decimal_alpha(capsys):
    code, rec, err = run_json(capsys, "spectrum", "-g", "Dhc", "--alpha", "0.75")
    assert code == 0 and "warning" in err
    assert abs(rec["eigenvalues"][0] - 2) < 1e-9
    jsonschema.validate(rec, load_schema("spectrum"))


def test_verify_star_exits_one(capsys):
    code, rec, _ = run_json(capsys, "verify", "--suite", "ds", "--family", "star",
                            "--min-n", "5", "--max-n", "5", "--alpha", "0")
    assert code == 1 and rec["status"] == "fail"
    assert rec["counterexamples"][0]["mates"] == ["DBW"]
    jsonschema.validate(rec, load_schema("report"))


@pytest.mark.parametrize("argv", [
    ["charpoly", "-g", "zzz"],
    ["spectrum", "-g", "A_", "--alpha", "3/2"],
    ["spectrum", "-g", "A_"],
    ["join", "-g", "A_"],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "ds"],
    ["charpoly", "-g", "A_", "--alpha", "1/2", "--mode", "symbolic"],
    ["nosuchcommand"],
])
def test_usage_errors_exit_two(argv, capsys):
    with pytest.raises(SystemExit) as e:
        sys.exit(main(argv))
    assert e.value.code == 2


def test_schemas_validate(capsys):
    cases = [
        ("charpoly", ["charpoly", "-g", "A_", "-g", "Bw"]),
        ("spectrum", ["spectrum", "-g", "Bw", "--alpha", "1/3"]),
        ("coronal", ["coronal", "-g", "Bw"]),
        ("coronal", ["coronal", "-g", "Bw", "--alpha", "2/3"]),
        ("invariants", ["invariants", "-g", "Dhc", "--alpha", "1/2"]),
        ("join", ["join", "-g", "@", "-g", "Bw", "--check"]),
        ("report", ["verify", "--suite", "lem2.1", "--max-n", "4"]),
        ("report", ["verify", "--suite", "corollary-regression", "--max-n", "4"]),
    ]
    for schema, argv in cases:
        code, rec, _ = run_json(capsys, *argv)
        assert code == 0, argv
        recs = rec if isinstance(rec, list) else [rec]
        for r in recs:
            jsonschema.validate(r, load_schema(schema))


def test_forge_rejects_and_certificate_schema(capsys, tmp_path):
    code, out, _ = run(capsys, "forge", "-g", "@", "--h1", "A_", "--h2", "A_")
    assert code == 1 and "rejected" in out
    # K_{1,4} and C4 + K1 share the A-spectrum but not the coronal at alpha = 0
    code, out, _ = run(capsys, "forge", "-g", "@", "--h1", "Ds_", "--h2", "DBW", "--alpha", "0")
    assert code == 1 and "coronal" in out


def test_scan_json_lines_and_jobs_determinism(capsys, tmp_path):
    code, out1, _ = run(capsys, "scan", "--max-n", "6", "--alpha", "0", "--format", "json")
    assert code == 0
    lines = [json.loads(line) for line in out1.splitlines() if line.strip()]
    assert lines and all(len(r["members"]) > 1 for r in lines)
    for r in lines:
        jsonschema.validate(r, load_schema("class"))
    code, out2, _ = run(capsys, "scan", "--max-n", "6", "--alpha", "0", "--format", "json", "--jobs", "3")
    assert out1 == out2
    target = tmp_path / "classes.jsonl"
    run(capsys, "scan", "--max-n", "6", "--alpha", "0", "--format", "json", "--out", str(target))
    assert target.read_text() == out1


def test_verify_output_is_deterministic(capsys):
    argv = ["verify", "--suite", "ds", "--family", "path", "--min-n", "3", "--max-n", "6",
            "--alpha", "1/4,2/5", "--format", "json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv, "--jobs", "2")
    assert a == b and "timing" not in json.loads(a)


def test_csv_output(capsys):
    code, out, _ = run(capsys, "charpoly", "-g", "A_", "-g", "Bw", "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 3


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "alphaspec.cli", "charpoly", "-g", "@"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "x"
