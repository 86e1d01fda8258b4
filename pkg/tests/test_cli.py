import json
import subprocess
import sys

import pytest

from zerosum.cli import run
from zerosum.core import ResidueSequence
from zerosum.witness import validate, witness_from_dict


def structured(argv, capsys):
    code = run(argv + ["--output", "structured"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["exit_code"] == code
    return code, doc["result"]


def test_classify_example(capsys):
    code, r = structured(["classify", "--input", "p=11; A=1^2,7", "--l", "2"], capsys)
    assert code == 0
    assert r["zero_sum_free"] is True and r["complete"] is False
    assert r["l_results"] == [{"l": 2, "l_zero_sum_free": True, "l_complete": False}]


def test_classify_accepts_json_input(capsys):
    code, r = structured(["classify", "--input", '{"p": 11, "elements": [[1, 2], [7, 1]]}'], capsys)
    assert code == 0 and r["sequence"] == {"p": 11, "elements": [[1, 2], [7, 1]]}


def test_text_output(capsys):
    assert run(["classify", "--input", "p=11; A=1^2,7"]) == 0
    out = capsys.readouterr().out
    assert "p=11; A=1^2,7" in out and "zero_sum_free" in out


def test_egz_verify(capsys):
    code, r = structured(["egz", "verify", "-p", "5"], capsys)
    assert code == 0 and r["counterexamples"] == [] and r["total_multisets"] == 715


def test_budget_refusal(capsys, monkeypatch):
    code, r = structured(["egz", "verify", "-p", "11"], capsys)
    assert code == 3 and r["needed"] > r["budget"]
    code, _ = structured(["egz", "verify", "-p", "3", "--max-enumeration", "5"], capsys)
    assert code == 3
    monkeypatch.setenv("ZEROSUM_MAX_ENUMERATION", "5")
    code, _ = structured(["count", "census", "-p", "5", "-m", "1"], capsys)
    assert code == 3


def test_invalid_input(capsys):
    assert run(["classify", "--input", "p=12; A=1"]) == 2
    assert run(["no-such-command"]) == 2
    assert run(["witness", "--theorem", "3", "--input", "p=7; A=1"]) == 2
    assert run(["witness", "--theorem", "1", "--input", "p=11; A=1,10"]) == 2
    capsys.readouterr()


def test_witness_round_trip(capsys):
    code, r = structured(["witness", "--theorem", "2", "--input", "p=11; A=2,4,6,8",
                          "--budget", "3"], capsys)
    assert code == 0 and r["valid"]
    w = witness_from_dict(r["witness"])
    assert w.b == 5 and len(w.a_flat) == 0
    assert validate(w, ResidueSequence.from_dict(r["sequence"]))
    code, r = structured(["witness", "--theorem", "3", "--input", "p=7; A=0^3,1^3",
                          "--l", "3", "--window", "0"], capsys)
    assert code == 0
    assert (r["witness"]["b"], r["witness"]["c"], r["witness"]["l1"]) == (1, 0, 3)


def test_witness_absent_within_budget(capsys):
    # {1, 2, 5, 7} is zero-sum-free but every dilate needs one removal
    code, r = structured(["witness", "--theorem", "1", "--input", "p=11; A=1,2,5,7",
                          "--budget", "0"], capsys)
    assert code == 1 and r["witness"] is None
    code, r = structured(["witness", "--theorem", "1", "--input", "p=11; A=1,2,5,7",
                          "--budget", "1"], capsys)
    assert code == 0 and r["valid"] and r["witness"]["a_flat"]["elements"] == [[7, 1]]


def test_extremal_and_counting(capsys):
    code, r = structured(["extremal", "--family", "A1", "-p", "11", "-m", "2"], capsys)
    assert code == 0 and r["sequence"] == {"p": 11, "elements": [[1, 2], [2, 2], [3, 1]]}
    code, r = structured(["extremal", "--family", "A3", "-p", "5", "-m", "1", "--l", "9"], capsys)
    assert code == 1 and r["infeasible"]
    code, r = structured(["count", "partitions", "-n", "5", "-m", "1"], capsys)
    assert r["count"] == 3
    code, r = structured(["count", "census", "-p", "3", "-m", "1"], capsys)
    assert r["count_zero_sum_free"] == 2


def test_egz_greedy(capsys):
    code, r = structured(["egz", "greedy", "--input", "p=11; A=0^10,1^8,3,4"], capsys)
    assert code == 0 and r["subsequence"] == {"p": 11, "elements": [[0, 2], [1, 8], [3, 1]]}
    code, r = structured(["egz", "greedy", "--input", "p=5; A=0^4,1^4"], capsys)
    assert code == 1 and r["subsequence"] is None


def test_lemma_commands(capsys):
    code, r = structured(["lemma", "zero-subset", "--D", "4", "--X", "1,3,2,2"], capsys)
    assert r["subsequence"] == [1, 3]
    code, r = structured(["lemma", "crt", "--d", "2,3", "--r", "5"], capsys)
    assert r["a_list"] == [1, 1]
    code, r = structured(["lemma", "crt-bounded", "--d", "3", "--D", "7", "--r", "1"], capsys)
    assert r["a_list"] == [5]
    code, r = structured(["lemma", "crt-bounded", "--d", "2,4", "--D", "6", "--r", "1"], capsys)
    assert code == 2
    code, r = structured(["lemma", "olson-probe", "-p", "7"], capsys)
    assert code == 0 and r["min_ratio_float"] > 0


@pytest.mark.parametrize("argv", [
    ["lemma", "ap-probe", "-p", "101", "--size", "10", "--l", "5", "--trials", "30", "--seed", "1"],
    ["egz", "extremal", "-p", "5", "--orbit-reduce"],
])
def test_deterministic_output(argv, capsys):
    run(argv + ["--output", "structured"])
    first = capsys.readouterr().out
    run(argv + ["--output", "structured"])
    assert capsys.readouterr().out == first


def test_verify_suite_quick(capsys):
    code = run(["verify-suite", "--level", "quick", "--output", "structured"])
    doc = json.loads(capsys.readouterr().out)["result"]
    assert doc["passed"] + doc["failed"] == 11
    failed = [c["number"] for c in doc["criteria"] if not c["passed"]]
    assert code == (0 if not failed else 1)
    assert set(failed) <= {6}


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zerosum.cli", "classify", "--input",
                           "p=11; A=1^2,7", "--output", "structured"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["zero_sum_free"] is True
