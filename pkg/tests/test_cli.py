"""Tests for the orbitkit command line."""

import json

import pytest

from orbitkit_cli import main


@pytest.fixture(autouse=True)
def no_settings_file(monkeypatch, tmp_path):
    monkeypatch.setenv("ORBITKIT_CONFIG", str(tmp_path / "missing.json"))
    monkeypatch.delenv("ORBITKIT_SEED", raising=False)


def test_dim_b3(capsys):
    assert main(["dim", "--type", "B3", "--roots", "e1,e2+e3"]) == 0
    out = capsys.readouterr().out
    assert "dim = 4" in out
    assert "= 6" in out


def test_dim_json(capsys):
    assert main(["dim", "--type", "G2", "--roots", "a1+a2,3a1+a2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim"] == 2
    assert data["bound"] == 4
    assert data["system"] == "G2"
    assert data["prime"] == [7]
    assert data["flags"] == {"bound_ok": True, "even_ok": True, "reduced_applied": False}


def test_dim_a1(capsys):
    assert main(["dim", "--type", "A1", "--roots", "a1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["dim"], data["bound"]) == (0, 0)


def test_dim_reports_reduction(capsys):
    assert main(["dim", "--type", "C2", "--roots", "e1-e2,e1+e2"]) == 0
    out = capsys.readouterr().out
    assert "dim = 2" in out
    assert "reduced to" in out


def test_dim_with_scalars(capsys):
    assert main(["dim", "--type", "B3", "--roots", "e1,e2+e3", "--xi", "2,5", "--prime", "11", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 4


def test_dump_constants(tmp_path):
    path = tmp_path / "g2.csv"
    assert main(["dim", "--type", "G2", "--roots", "a1", "--dump-constants", str(path)]) == 0
    assert path.read_text().splitlines()[0] == "alpha,gamma,sum,N"


@pytest.mark.parametrize(
    "argv, code",
    [
        (["dim", "--type", "B3", "--roots", "e1,e2"], 3),
        (["dim", "--type", "B3", "--roots", "e1+e2+e3"], 2),
        (["dim", "--type", "X3", "--roots", "e1"], 2),
        (["dim", "--type", "B3", "--roots", "e1", "--prime", "5"], 4),
        (["dim", "--type", "B3", "--roots", "e1", "--prime", "9"], 3),
        (["dim", "--type", "B3", "--roots", "e1,e2+e3", "--xi", "1"], 3),
        (["scan", "--type", "E7"], 3),
        (["table", "e8"], 2),
        ([], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
    if code in (3, 4):
        assert "error:" in capsys.readouterr().err


def test_table_g2_text(capsys):
    assert main(["table", "g2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 3
    assert all(line.endswith("ok") for line in lines)


def test_table_g2_csv(capsys):
    assert main(["table", "g2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "row,D,M,|M|,F,dim_computed"
    assert [line.split(",")[-1] for line in lines[1:]] == ["4", "2", "2"]


def test_table_g2_json(capsys):
    assert main(["table", "g2", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [row["dim_computed"] for row in rows] == [4, 2, 2]
    assert [row["bound_computed"] for row in rows] == [4, 4, 4]


def test_verify_g2(capsys):
    assert main(["verify", "--type", "G2", "--max-size", "2", "--json"]) == 0
    captured = capsys.readouterr()
    reports = json.loads(captured.out)
    assert len(reports) == 9
    assert "9 subsets, 0 failed" in captured.err


def test_verify_a2(capsys):
    assert main(["verify", "--type", "A2", "--max-size", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert lines[-1] == "3 subsets, 0 failed"


def test_verify_seed_from_settings(capsys, monkeypatch, tmp_path):
    path = tmp_path / "orbitkit.json"
    path.write_text(json.dumps({"seed": 17, "xi_samples": 2}))
    monkeypatch.setenv("ORBITKIT_CONFIG", str(path))
    assert main(["verify", "--type", "A2", "--max-size", "1", "--json"]) == 0
    assert {r["seed"] for r in json.loads(capsys.readouterr().out)} == {17}


@pytest.mark.parametrize("label", ["D5", "A3"])
def test_scan_finds_nothing(capsys, label):
    assert main(["scan", "--type", label, "--expect-none"]) == 0
    assert f"{label}: 0 non-admissible hits" in capsys.readouterr().out


def test_table_f4_has_no_mismatch(capsys):
    assert main(["table", "f4"]) == 0
    assert "MISMATCH" not in capsys.readouterr().out


def test_table_f4_csv_matches_golden(capsys, golden):
    assert main(["table", "f4", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines() == golden("f4_table.csv").splitlines()


def test_table_f4_json_matches_golden(capsys, golden):
    assert main(["table", "f4", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == json.loads(golden("f4_table.json"))


@pytest.mark.parametrize("label", ["D4", "A5", "B4"])
def test_scan_matches_golden(capsys, golden, label):
    assert main(["scan", "--type", label]) == 0
    out = capsys.readouterr().out
    assert out == golden(f"scan_{label.lower()}.txt", out)
    found = not out.startswith(f"{label}: 0 ")
    assert main(["scan", "--type", label, "--expect-none"]) == (1 if found else 0)


def test_prime_above_supported_maximum(capsys):
    assert main(["dim", "--type", "B3", "--roots", "e1", "--prime", str(2**31 - 1)]) == 3
    assert "exceeds" in capsys.readouterr().err
