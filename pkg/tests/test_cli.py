import json
from fractions import Fraction

import pytest

from extform.cli import main
from extform.io import matrix_to_csv, parse_matrix_csv


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_slack_maxcut(capsys, tmp_path):
    path = tmp_path / "s.csv"
    code, out, _ = run(capsys, "slack", "--problem", "maxcut", "--n", "3", "--tau", "1", "--sigma", "1",
                       "--matrix-out", str(path))
    rep = json.loads(out)
    assert code == 0 and (rep["rows"], rep["cols"]) == (8, 8)
    assert len(parse_matrix_csv(path.read_text())) == 8


def test_slack_junta(capsys):
    code, out, _ = run(capsys, "slack", "--problem", "junta", "--n", "5", "--k", "2")
    rep = json.loads(out)
    assert code == 0 and (rep["rows"], rep["cols"], rep["disjoint_ones"]) == (10, 32, 80)


def test_bad_rational(capsys):
    with pytest.raises(SystemExit) as e:
        main(["slack", "--problem", "maxcut", "--tau", "1/0"])
    assert e.value.code != 0


def test_certify_gadgets(capsys):
    code, out, _ = run(capsys, "certify", "--gadget", "maxcut-to-max2sat", "--n", "4")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "certify", "--gadget", "matching-to-hamiltonian", "--n2", "4")
    rep = json.loads(out)
    assert code == 0 and rep["notes"]["cycles"] == 2520


def test_export_and_corrupted_reduction(capsys, tmp_path):
    path = tmp_path / "red.json"
    code, _, _ = run(capsys, "export", "--gadget", "maxcut-to-dicut", "--n", "3", "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "certify", "--reduction", str(path))
    assert code == 0 and json.loads(out)["ok"]
    doc = json.loads(path.read_text())
    doc["reduction"]["beta"][3]["shift"] = "1/3"
    path.write_text(json.dumps(doc))
    code, out, err = run(capsys, "certify", "--reduction", str(path))
    assert code == 1 and "first violation" in err
    v = json.loads(out)["violations"][0]
    assert v["f1"] and v["residual"]


def test_rank_and_determinism(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"entries": [["1", "0"], ["0", "1"]]}))
    _, first, _ = run(capsys, "rank", "--matrix", str(path))
    _, second, _ = run(capsys, "rank", "--matrix", str(path))
    assert first == second
    rep = json.loads(first)
    assert rep["lp_rank"] == [2, 2] and rep["nonneg_rank"] == [2, 2]


def test_roundtrip_and_round(capsys, tmp_path):
    code, out, _ = run(capsys, "roundtrip", "--problem", "maxcut", "--n", "3")
    assert code == 0 and json.loads(out)["ok"]
    mt = tmp_path / "mt.csv"
    code, _, _ = run(capsys, "export", "--problem", "maxcut", "--n", "3", "--format", "csv",
                     "--out", str(mt))
    M = parse_matrix_csv(mt.read_text())
    M[1][0] += Fraction(1, 5)
    mt.write_text(matrix_to_csv(M))
    code, out, _ = run(capsys, "round", "--problem", "maxcut", "--n", "3", "--mtilde", str(mt))
    rep = json.loads(out)
    assert code == 0 and rep["size_N"] <= rep["size_bound"]


def test_missing_file(capsys):
    code, _, err = run(capsys, "rank", "--matrix", "/nonexistent.csv")
    assert code == 1 and "error" in err
