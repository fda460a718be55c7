import json

import pytest

from ggmark.cli import main

from worked_examples import GG_TEXT, SECOND_BEFORE


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_family_ok(capsys):
    code, out, err = run(capsys, "verify", "--family", "O", "--k", "2..3", "--n-max", "6")
    assert code == 0
    rows = json.loads(out)
    assert all(r["match"] for r in rows)
    assert {(r["k"], r["i"]) for r in rows} == {(2, 1), (3, 1), (3, 2)}


def test_verify_trivial_cell(capsys):
    code, out, _ = run(capsys, "verify", "--family", "O", "--k", "2", "--n-max", "0")
    assert code == 0
    rows = json.loads(out)
    assert rows == [
        {"family": "O", "k": 2, "i": 1, "n": 0, "m": None,
         "classCount": 1, "congruenceCount": 1, "match": True}
    ]


def test_verify_identity(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "over4", "--k", "3", "--i", "2", "--order", "25")
    assert code == 0
    assert json.loads(out)[0]["match"] is True


def test_verify_detects_mismatch(capsys):
    # the classic even family's printed congruence rule diverges at n = 6
    code, out, err = run(capsys, "verify", "--family", "C", "--k", "2", "--n-max", "6")
    assert code == 1
    assert "mismatch" in err


def test_count_csv_schema(capsys):
    code, out, _ = run(capsys, "count", "--family", "E", "--k", "2", "--i", "1",
                       "--n-max", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("# ggmark-csv v1")
    assert lines[-1] == "E,2,1,2,,1,1,1"


def test_count_by_parts(capsys):
    code, out, _ = run(capsys, "count", "--family", "O", "--k", "2", "--n-max", "3",
                       "--by-parts")
    assert code == 0
    rows = json.loads(out)
    refined = [r for r in rows if r["m"] is not None]
    assert refined
    for n in range(4):
        total = sum(r["classCount"] for r in refined if r["n"] == n)
        (coarse,) = [r["classCount"] for r in rows if r["n"] == n and r["m"] is None]
        assert total == coarse


def test_determinism(capsys):
    _, first, _ = run(capsys, "count", "--family", "O", "--k", "2..3", "--n-max", "5",
                      "--format", "csv")
    _, second, _ = run(capsys, "count", "--family", "O", "--k", "2..3", "--n-max", "5",
                       "--format", "csv")
    assert first == second


def test_workers_agree_with_serial(capsys):
    _, serial, _ = run(capsys, "verify", "--family", "E", "--k", "2..3", "--n-max", "7")
    _, parallel, _ = run(capsys, "verify", "--family", "E", "--k", "2..3", "--n-max", "7",
                         "--workers", "3")
    assert serial == parallel


def test_mark_gg_worked_example(capsys):
    code, out, _ = run(capsys, "mark", "--scheme", "gg", "--input", GG_TEXT)
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"] == [7, 5, 3]
    assert payload["entries"][4] == {"size": 3, "overlined": True, "mark": 3}


def test_mark_with_clusters(capsys):
    code, out, _ = run(capsys, "mark", "--scheme", "gg", "--input", "~2,2", "--clusters")
    payload = json.loads(out)
    assert payload["clusters"] == [[0, 1]]


def test_biject_final_forward(capsys):
    code, out, _ = run(capsys, "biject", "--theorem", "final", "--direction", "fwd",
                       "--input", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["xi"] == "-1" and payload["residue"] == "~2"


def test_biject_inverse_round_trip(capsys):
    _, out, _ = run(capsys, "biject", "--theorem", "N1", "--direction", "fwd",
                    "--input", "1,3,~5")
    fwd = json.loads(out)
    _, out2, _ = run(capsys, "biject", "--theorem", "N1", "--direction", "inv",
                     "--input", fwd["residue"], "--aux", fwd["tau"])
    assert json.loads(out2)["result"] == "1,3,~5"


def test_move_receipt(capsys):
    code, out, _ = run(capsys, "move", "--kind", "secondDilation", "--p", "5",
                       "--input", SECOND_BEFORE)
    assert code == 0
    payload = json.loads(out)
    assert payload["deltaWeight"] == 2


def test_move_invalid_is_usage_error(capsys):
    code, _, err = run(capsys, "move", "--kind", "firstDilation", "--p", "9",
                       "--input", "1")
    assert code == 2 and "error" in err


def test_bailey_chain(capsys):
    code, out, _ = run(capsys, "bailey", "--k", "2", "--i", "1",
                       "--variant", "oddModulus", "--order", "25", "--n-max", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["allOk"] is True
    assert payload["steps"][0]["step"] == "seed"


def test_caps_enforced(capsys):
    code, _, err = run(capsys, "verify", "--family", "O", "--k", "2", "--n-max", "33")
    assert code == 2 and "cap" in err
    code, _, _ = run(capsys, "count", "--family", "O", "--k", "2", "--n-max", "4",
                     "--unsafe")
    assert code == 0


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["mark", "--scheme", "sideways", "--input", "1"])
    assert exc.value.code == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.csv"
    code, out, _ = run(capsys, "count", "--family", "O", "--k", "2", "--n-max", "2",
                       "--format", "csv", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("# ggmark-csv v1")


def test_env_workers(monkeypatch, capsys):
    monkeypatch.setenv("GGMARK_WORKERS", "2")
    code, out, _ = run(capsys, "verify", "--family", "O", "--k", "2", "--n-max", "5")
    assert code == 0 and json.loads(out)
