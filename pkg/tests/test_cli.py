"""CLI: JSON output, determinism, exit codes."""

import io
import json
import sys

from knwznw.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_basis_subcommand(capsys):
    code, out, _ = run_cli(["basis", "--lambda", "-1", "--n", "0",
                            "--p", "1", "--points", "0"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["num"] == ["0", "1"] and data["den"] == ["1"]
    assert data["lambda"] == -1 and data["adjusted"] is False
    assert data["orders"] == {"1": 1, "infinity": 1}


def test_output_determinism(capsys):
    args = ["table", "--algebra", "L", "--window", "-1:1", "--points", "0,1"]
    _, out1, _ = run_cli(args, capsys)
    _, out2, _ = run_cli(args, capsys)
    assert out1 == out2


def test_output_roundtrip(capsys):
    code, out, _ = run_cli(["cocycle", "--kind", "chi", "--window=-3:3",
                            "--points", "0"], capsys)
    assert code == 0
    data = json.loads(out)
    again = json.loads(json.dumps(data, sort_keys=True))
    assert again == data
    # classical values present
    vals = {(tuple(e["left"]), tuple(e["right"])): e["result"]
            for e in data["entries"]}
    assert vals[((-1, 2, 1), (-1, -2, 1))] == "1/2"


def test_affine_table(capsys, tmp_path):
    cfgfile = tmp_path / "c.json"
    cfgfile.write_text(json.dumps({"points": ["0"], "lie_algebra": "sl2"}))
    code, out, _ = run_cli(["affine", "--config", str(cfgfile),
                            "--window=-1:1"], capsys)
    assert code == 0
    data = json.loads(out)
    by_key = {(tuple(e["left"]), tuple(e["right"])): e
              for e in data["entries"]}
    e = by_key[(("e", 1, 1), ("f", -1, 1))]
    assert e["central"] == "1"
    assert e["result"] == [["h", 0, 1, "1"]]


def test_module_subcommand(capsys, tmp_path):
    cfgfile = tmp_path / "m.json"
    cfgfile.write_text(json.dumps({
        "points": ["0"],
        "lie_algebra": "abelian1",
        "module": {"kind": "fock", "weights": ["0"], "level": "1",
                   "depth": 4},
    }))
    code, out, _ = run_cli(["module", "--config", str(cfgfile)], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["slice_dimensions"] == {"0": 1, "-1": 1, "-2": 2,
                                        "-3": 3, "-4": 5}


def test_sugawara_subcommand(capsys, tmp_path):
    cfgfile = tmp_path / "s.json"
    cfgfile.write_text(json.dumps({
        "points": ["0"],
        "lie_algebra": "sl2",
        "module": {"kind": "weyl", "weights": [0], "level": "1",
                   "depth": 5},
    }))
    code, out, _ = run_cli(["sugawara", "--config", str(cfgfile),
                            "--pairs", "2,1,-2,1", "--slices", "-2"],
                           capsys)
    assert code == 0
    data = json.loads(out)
    entry = data["entries"][0]
    assert entry["is_scalar"] is True
    assert entry["ratio"] == "1"
    assert entry["chi"] == "1/2"


def test_kz_subcommand(capsys, tmp_path):
    cfgfile = tmp_path / "kz.json"
    cfgfile.write_text(json.dumps({
        "points": ["0", "1"],
        "lie_algebra": "sl2",
        "weights": [1, 1],
        "level": "1",
        "depth": 3,
    }))
    code, out, _ = run_cli(["kz", "--config", str(cfgfile)], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["kappa"] == "-1/3"
    assert data["sign_convention"] == "-1"
    assert data["residual_zero"] is True
    assert data["flatness"] == "ok"
    assert len(data["matrices"]) == 2
    assert data["scalar_shifts"] == ["1/2", "-1/2"]


def test_verify_subcommand(capsys):
    code, out, _ = run_cli(["verify", "--suite", "basis"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert all(c["passed"] for c in data["checks"])


def test_verify_all_suites(capsys):
    # the passing build, end to end, on the shipped sample configurations
    code, out, _ = run_cli(["verify", "--suite", "all"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    names = {c["name"] for c in data["checks"]}
    assert {"duality-grid", "classical-central-charge",
            "kz-classical-agreement"} <= names


def test_config_error_exit_code(capsys, tmp_path):
    code, _, err = run_cli(["basis", "--lambda", "0", "--n", "0"], capsys)
    assert code == 2 and "points" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(["kz", "--config", str(bad)], capsys)
    assert code == 2


def test_domain_error_exit_code(capsys, tmp_path):
    cfgfile = tmp_path / "crit.json"
    cfgfile.write_text(json.dumps({
        "points": ["0", "1"],
        "lie_algebra": "sl2",
        "weights": [1, 1],
        "level": "-2",
        "depth": 2,
    }))
    code, _, err = run_cli(["kz", "--config", str(cfgfile)], capsys)
    assert code == 1 and "critical" in err


def test_unknown_command_exits_2(capsys):
    code = main(["frobnicate"])
    assert code == 2


def test_json_indent(capsys):
    code, out, _ = run_cli(["--json-indent", "2", "basis", "--lambda", "0",
                            "--n", "0", "--points", "0"], capsys)
    assert code == 0 and out.startswith("{\n  ")
