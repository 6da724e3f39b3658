import csv
import io
import json

import pytest

from witnessgate.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


SWAP = {"dA": 2, "dB": 2,
        "entries": [["1", "0", "0", "0"], ["0", "0", "1", "0"],
                    ["0", "1", "0", "0"], ["0", "0", "0", "1"]]}
DIAG = {"dA": 2, "dB": 2,
        "entries": [["1", "0", "0", "0"], ["0", "1", "0", "0"],
                    ["0", "0", "1", "0"], ["0", "0", "0", "-1"]]}


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_check_swap(tmp_path, capsys):
    code, out, _ = run_cli(["check", write(tmp_path, "swap.json", SWAP)], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "EntanglementWitness"


def test_check_diag_certificate(tmp_path, capsys):
    code, out, _ = run_cli(["check", write(tmp_path, "diag.json", DIAG)], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "NotBlockPositive"
    assert report["certificate"] == {"v": ["0", "1"], "w": ["0", "1"], "value": "-1"}


def test_check_malformed(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, err = run_cli(["check", str(p)], capsys)
    assert code == 2


def test_check_non_hermitian(tmp_path, capsys):
    data = {"dA": 2, "dB": 2,
            "entries": [["1", "2", "0", "0"], ["3", "1", "0", "0"],
                        ["0", "0", "1", "0"], ["0", "0", "0", "1"]]}
    code, _, err = run_cli(["check", write(tmp_path, "nh.json", data)], capsys)
    assert code == 3


def test_check_qutrit_qubit(tmp_path, capsys):
    n = 6
    entries = [[("2" if i == j else "0") for j in range(n)] for i in range(n)]
    data = {"dA": 3, "dB": 2, "entries": entries}
    code, out, _ = run_cli(["check", write(tmp_path, "id6.json", data)], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["necessary"] == "Inconclusive"
    assert report["sufficient"] == "BlockPositive"


def test_poly_commands(capsys):
    code, out, _ = run_cli(["poly", "count-roots", "--coeffs=-2,0,1",
                            "--lo=0", "--hi=2"], capsys)
    assert code == 0 and json.loads(out) == {"count": 1}
    code, out, _ = run_cli(["poly", "nonneg", "--coeffs=1,-2,1"], capsys)
    assert json.loads(out) == {"nonneg": True}
    code, out, _ = run_cli(["poly", "alternative", "--g1=-1/2,1", "--g2=1/4,-1",
                            "--lo=0", "--hi=1"], capsys)
    data = json.loads(out)
    assert data["holds"] is False and data["witness"]
    code, _, _ = run_cli(["poly", "count-roots", "--coeffs=abc"], capsys)
    assert code == 2


def test_sweep_csv(tmp_path, capsys):
    argv = ["sweep", "--family", "E", "--from=-1/5", "--to=1/5", "--step=1/5",
            "--restarts", "8"]
    code, out, _ = run_cli(argv, capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["a"] for r in rows] == ["-1/5", "0", "1/5"]
    for r in rows:
        assert r["verdict_exact"] == "PositiveSemidefinite"
        assert r["necessary_verdict"] == "Inconclusive"
        assert r["sufficient_verdict"] == "BlockPositive"
        float(r["lambda_min"])
        float(r["mu_hat"])
    # bit-identical across runs with the same seed
    code2, out2, _ = run_cli(argv, capsys)
    assert out2 == out


def test_sweep_validation(capsys):
    code, _, _ = run_cli(["sweep", "--family", "E", "--from=0", "--to=1",
                          "--step=-1"], capsys)
    assert code == 2
