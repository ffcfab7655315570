import json
import os

import pytest

from nilcone.cli import run, SCHEMA


def _capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tensor_even_label_example(capsys):
    code, out, _ = _capture(capsys, ["tensor", "--preset", "A1-adj",
                                     "--lhs", "2", "--rhs", "2"])
    assert code == 0
    blob = json.loads(out)
    assert blob["schema"] == SCHEMA
    assert blob["result"] == {"4": 1, "2": 1, "0": 1}


def test_qanalog_example(capsys):
    code, out, _ = _capture(capsys, ["qanalog", "--preset", "A1-adj",
                                     "--lambda", "2", "--mu", "0"])
    assert code == 0
    assert json.loads(out)["result"] == [[1, "1"]]


def test_roots_example(capsys):
    code, out, _ = _capture(capsys, ["roots", "--preset", "A1-sc"])
    assert code == 0
    assert len(json.loads(out)["result"]) == 1


def test_branch_subcommand(capsys):
    code, out, _ = _capture(capsys, ["branch", "--preset", "A2-sc",
                                     "--subset", "0", "--weight", "1,0"])
    assert code == 0
    result = json.loads(out)["result"]
    assert sum(result.values()) == 2


def test_deterministic_output(capsys):
    argv = ["hilbert", "--preset", "A2-adj", "--truncation", "8"]
    _, first, _ = _capture(capsys, argv)
    _, second, _ = _capture(capsys, argv)
    assert first == second


def test_unknown_preset_exit_code(capsys):
    code, out, err = _capture(capsys, ["roots", "--preset", "Z9"])
    assert code == 1 and not out
    assert err.startswith("error\tdomain\t")
    assert err.count("\n") == 1


def test_domain_error_exit_code(capsys):
    code, _, err = _capture(capsys, ["qanalog", "--preset", "A1-adj",
                                     "--lambda", "3", "--mu", "0"])
    assert code == 1
    assert "lattice" in err


def test_resource_error_exit_code(capsys):
    code, _, err = _capture(capsys, ["bk-verify", "--preset", "A1-sc",
                                     "--nu", "900", "--lambda", "0"])
    assert code == 2
    assert err.startswith("error\tresource\t")


def test_bk_verify_roundtrip(capsys):
    code, out, _ = _capture(capsys, ["bk-verify", "--preset", "A2-sc",
                                     "--nu", "1,1", "--lambda", "0,0"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["equal"] is True
    assert result["filtration"] == result["predicted"] == [[1, "1"], [2, "1"]]


def test_hom_both_routes(capsys):
    code, out, _ = _capture(capsys, ["hom", "--preset", "A1-adj",
                                     "--source", "0@0", "--target", "2@0",
                                     "--route", "both"])
    assert code == 0
    entries = json.loads(out)["result"]["entries"]
    assert entries == [{"internal": 0, "cohomological": 2, "dim": 1}]


def test_sl2_table_tsv(capsys):
    code, out, _ = _capture(capsys, ["sl2-table", "--object", "proj",
                                     "--labels", "0"])
    assert code == 0
    assert out.splitlines() == ["projective\t0\t0\t0\t1",
                                "projective\t0\t1\t-2\t1",
                                "projective\t0\t2\t0\t1"]


def test_sl2_profile_json(capsys):
    code, out, _ = _capture(capsys, ["sl2-profile", "--k", "0",
                                     "--window=-2:0"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["0"] == {"-1": 1, "0": 2}
    assert result["-1"] == {"-1": 1, "0": 2, "1": 1}


def test_out_path(tmp_path, capsys):
    target = tmp_path / "result.json"
    code, out, _ = _capture(capsys, ["poincare", "--preset", "A1-sc",
                                     "--truncation", "4",
                                     "--out", str(target)])
    assert code == 0 and not out
    blob = json.loads(target.read_text())
    assert blob["result"] == [[0, "1"], [2, "1"], [4, "1"]]


def test_cache_dir_round_trip(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("NILCONE_CACHE_DIR", str(tmp_path))
    argv = ["qanalog", "--preset", "B2-sc", "--lambda", "2,2", "--mu", "0,0"]
    _, first, _ = _capture(capsys, argv)
    files = list(tmp_path.glob("*.json"))
    assert files, "cache file was not written"
    _, second, _ = _capture(capsys, argv)
    assert first == second
    # a corrupted cache entry is ignored, not trusted
    for f in files:
        f.write_text("{not json")
    _, third, _ = _capture(capsys, argv)
    assert first == third
