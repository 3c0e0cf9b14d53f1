import json

import pytest

import coadjoint as ca
from coadjoint.cli import main

B7_SET = "e1-e6,e1+e6,e2,e3-e7,e3+e7,e4+e5"
D7_SET = "e1-e5,e1+e5,e2-e6,e2+e6,e3+e4"


def run_json(capsys, argv):
    rc = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    records = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    return rc, records


def test_dim_worked_b7(capsys):
    rc, recs = run_json(capsys, ["dim", "B", "7", "--set", B7_SET, "--primes", "17,101"])
    assert rc == 0
    rec = recs[0]
    assert rec["l_sigma"] == 48 and rec["s_sigma"] == 6
    assert rec["defect"] == {"d1": 2, "d2": 1, "d3": 2, "d4": 1, "theta": 6}
    assert rec["predicted_dim"] == 30
    assert rec["oracle_rank"] == {"17": 30, "101": 30}
    assert rec["match"] is True


def test_dim_worked_d7(capsys):
    rc, recs = run_json(capsys, ["dim", "D", "7", "--set", D7_SET])
    assert rc == 0
    rec = recs[0]
    assert rec["predicted_dim"] == 30
    assert rec["polarization"]["dim"] == 27
    assert all(v == 30 for v in rec["oracle_rank"].values())
    blocks = {j: set(roots) for j, roots in rec["blocks"]}
    assert blocks[3] == {"e4-e7", "e4+e7"}


def test_dim_empty_set(capsys):
    rc, recs = run_json(capsys, ["dim", "B", "2", "--set", ""])
    assert rc == 0
    assert recs[0]["predicted_dim"] == 0
    assert all(v == 0 for v in recs[0]["oracle_rank"].values())


def test_dim_input_errors(capsys):
    assert main(["dim", "B", "2", "--set", "e1-e2,e1"]) == 2      # not orthogonal
    assert main(["dim", "B", "2", "--set", "e1!"]) == 2           # grammar
    assert main(["dim", "B", "2", "--set", "e1", "--primes", "3"]) == 2  # p < m
    assert main(["dim", "X", "2", "--set", ""]) == 2              # family
    capsys.readouterr()


def test_dim_normalizes_input(capsys):
    rc, recs = run_json(capsys, ["dim", "B", "2", "--set", "e1,e2"])
    assert rc == 0
    assert recs[0]["normalized_set"] == "e1"
    assert recs[0]["set"] == "e1,e2"


def test_dim_xi_handling(capsys):
    rc, recs = run_json(capsys, ["dim", "C", "2", "--set", "2e1", "--xi", "2e1=3"])
    assert rc == 0 and recs[0]["xi"] == "2e1=3"
    assert main(["dim", "C", "2", "--set", "2e1", "--xi", "2e2=3"]) == 2
    capsys.readouterr()
    rc, recs = run_json(capsys, ["dim", "C", "2", "--set", "2e1", "--xi-seed", "9"])
    assert rc == 0 and recs[0]["xi_seed"] == "9"


def test_enumerate(capsys):
    assert main(["enumerate", "B", "2", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "6"
    assert main(["enumerate", "C", "2", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "6"
    assert main(["enumerate", "D", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["", "e1-e2", "e1-e2,e1+e2", "e1+e2"]


def test_roots(capsys):
    assert main(["roots", "B", "2"]) == 0
    out = capsys.readouterr().out
    assert "4 positive roots" in out and "e1+e2" in out


def test_verify_clean_and_perturbed(capsys, tmp_path):
    out = tmp_path / "records.ndjson"
    rc = main(["verify", "B", "3", "--xi-samples", "2", "--out", str(out)])
    assert rc == 0
    assert "0 mismatches" in capsys.readouterr().out
    records = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(records) == 22 * 3
    assert all(r["match"] and r["recursion_ok"] for r in records)

    rc = main(["verify", "B", "2", "--perturb-defect"])
    assert rc == 1
    assert "mismatches" in capsys.readouterr().out


def test_verify_round_trip_and_determinism(capsys, tmp_path):
    out1, out2 = tmp_path / "a.ndjson", tmp_path / "b.ndjson"
    argv = ["verify", "C", "3", "--xi-samples", "1", "--primes", "7,101"]
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()

    rs = ca.build_system("C", 3)
    for line in out1.read_text().splitlines():
        rec = json.loads(line)
        roots = ca.parse_root_set(rs, rec["normalized_set"])
        assert ca.format_root_set(roots) == rec["normalized_set"]
        xi = ca.parse_xi(rs, rec["xi"])
        assert ca.format_xi(rs, xi) == rec["xi"]
        assert set(xi) == set(roots)


def test_verify_parallel_matches_serial(capsys, tmp_path):
    out1, out2 = tmp_path / "serial.ndjson", tmp_path / "par.ndjson"
    argv = ["verify", "D", "3", "--xi-samples", "1"]
    assert main(argv + ["--out", str(out1), "--jobs", "1"]) == 0
    assert main(argv + ["--out", str(out2), "--jobs", "3"]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_budget_refusal(capsys):
    assert main(["verify", "B", "7"]) == 2
    err = capsys.readouterr().err
    assert "refusing" in err and "budget" in err


def test_spectrum(capsys):
    assert main(["spectrum", "B", "2", "--census", "5"]) == 0
    out = capsys.readouterr().out
    assert "mu=1" in out
    assert "census q=5: 625 functionals" in out
    assert "dimensions [0, 2]" in out

    assert main(["spectrum", "D", "5"]) == 0
    out = capsys.readouterr().out
    assert "mu=8" in out and out.count("ok=True") == 9


def test_spectrum_census_budget(capsys):
    assert main(["spectrum", "B", "3", "--census", "7"]) == 2
    capsys.readouterr()
