"""CLI surface: flags, formats, exit codes, report round trips."""

import json

import pytest

from valharm.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decompose_table_and_json(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--n", "4", "--i", "2", "--cap", "2")
    assert code == 0
    assert "2,2" in out and "2,-2" in out and "paired-lift" in out
    code, out, _ = run_cli(capsys, "decompose", "--n", "4", "--i", "2", "--cap", "2",
                           "--format", "json")
    rows = json.loads(out)
    assert [r["lambda"] for r in rows] == ["0,0", "2,-2", "2,0", "2,2"]
    assert rows[0]["dimension"] == 1


def test_decompose_trivial_endpoints(capsys):
    for i in ("0", "5"):
        code, out, _ = run_cli(capsys, "decompose", "--n", "5", "--i", i,
                               "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 1 and rows[0]["lambda"] == "0,0"


def test_decompose_csv(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--n", "5", "--i", "2", "--cap", "2",
                           "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("lambda,")
    assert len(lines) >= 3


def test_multiplicity_both(capsys):
    code, out, _ = run_cli(capsys, "multiplicity", "--n", "6", "--i", "3",
                           "--lambda", "2,2,-2", "--method", "both")
    assert code == 0
    rec = json.loads(out)
    assert rec["mult_conditions"] == rec["mult_alternating"] == 1
    code, out, _ = run_cli(capsys, "multiplicity", "--n", "5", "--i", "2",
                           "--lambda", "1,0")
    assert json.loads(out)["mult_conditions"] == 0
    code, out, _ = run_cli(capsys, "multiplicity", "--n", "5", "--i", "2",
                           "--lambda", "0,0")
    assert json.loads(out)["mult_conditions"] == 1


def test_branch_json(capsys):
    code, out, _ = run_cli(capsys, "branch", "--n", "5", "--lambda", "1,0",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["children"] == [[0, 0], [1, 0]]


def test_tensor_dim(capsys):
    for gamma, want in [("sym:2", 2), ("lambda-power:2", 0), ("standard", 0),
                        ("trivial", 1), ("weight:2,0", 1)]:
        code, out, _ = run_cli(capsys, "tensor-dim", "--n", "5", "--i", "2",
                               "--gamma", gamma)
        assert code == 0
        assert json.loads(out)["equivariant_dimension"] == want


def test_classify(capsys):
    code, out, _ = run_cli(capsys, "classify", "--n", "6", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    asym = [r["i"] for r in rows if r["SO(n)"] == "asymmetric-witness-exists"]
    assert asym == [3]
    assert all(r["O(n)"] == "always-symmetric-O(n)" for r in rows)


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "decompose", "--n", "4", "--i", "9")
    assert code == 64
    code, _, err = run_cli(capsys, "multiplicity", "--n", "5", "--i", "2",
                           "--lambda", "1,-1")
    assert code == 64
    code, _, _ = run_cli(capsys, "nonsense")
    assert code == 64
    code, _, _ = run_cli(capsys, "decompose")
    assert code == 64


def test_verify_roundtrip(tmp_path, capsys):
    cfg = {"campaign": "class-reduction", "i": 2, "trials": 3, "seed": 7,
           "ball_level": 1, "tolerances": {"rel_equality": "1e-25", "slack_floor": "0"}}
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    out_path = tmp_path / "report.json"
    csv_path = tmp_path / "report.csv"
    code, _, err = run_cli(capsys, "verify", "--config", str(cfg_path),
                           "--out", str(out_path), "--csv", str(csv_path))
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["schema"] == "valharm-report/1"
    assert report["summary"]["VIOLATION"] == 0
    assert csv_path.read_text().startswith("index,")
    # identical seeds give identical reports modulo wall time
    out2 = tmp_path / "report2.json"
    code, _, _ = run_cli(capsys, "verify", "--config", str(cfg_path), "--out", str(out2))
    a = json.loads(out_path.read_text()); a.pop("wall_time_s")
    b = json.loads(out2.read_text()); b.pop("wall_time_s")
    assert a == b
    # config round trip: the echoed config block parses back
    from valharm.verify.reporting import ExperimentConfig
    assert ExperimentConfig.from_json(report["config"]).to_json() == report["config"]


def test_verify_bad_config(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"campaign": "class-reduction", "mystery": 1}))
    code, _, err = run_cli(capsys, "verify", "--config", str(p))
    assert code == 64
    assert "mystery" in err
    code, _, _ = run_cli(capsys, "verify", "--config", str(tmp_path / "absent.json"))
    assert code == 64


def test_verify_seed_override(tmp_path, capsys):
    cfg = {"campaign": "bivaluation-symmetry", "i": 2, "trials": 2, "seed": 1}
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps(cfg))
    code, out, _ = run_cli(capsys, "verify", "--config", str(p), "--seed", "99")
    assert code == 0
    assert json.loads(out)["config"]["seed"] == 99


def test_selftest_subset_and_tamper(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--criteria", "10", "--quick")
    assert code == 0 and "[PASS] criterion 10" in out
    code, out, _ = run_cli(capsys, "selftest", "--criteria", "2", "--trials", "2",
                           "--inject-tamper")
    assert code == 2 and "[FAIL]" in out
    # tamper hook is cleaned up afterwards
    code, out, _ = run_cli(capsys, "selftest", "--criteria", "2", "--trials", "2")
    assert code == 0


def test_polytope_json_rationals():
    from valharm.convexgeo.polytope import Polytope
    p = Polytope([("1/3", "0", "0"), (0, 1, 0), (0, 0, 1), (1, 1, 1)], 3)
    data = p.to_json()
    assert data["dim"] == 3
    assert ["1/3", "0", "0"] in data["vertices"]
    assert Polytope.from_json(data) == p
