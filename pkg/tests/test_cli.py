import json
import subprocess
import sys

import pytest

from cyclohecke.cli import main
from cyclohecke.combinatorics import MPartition
from cyclohecke.repn import build_representation
from cyclohecke.serialize import rep_from_json, rep_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tableaux(capsys):
    code, out, _ = run(capsys, "tableaux", "--m", "2", "--shape", "[[1],[1]]")
    assert code == 0
    assert out.splitlines()[1:] == ["0: [[[1]],[[2]]]", "1: [[[2]],[[1]]]"]
    code, out, _ = run(capsys, "tableaux", "--shape", "[[2,1]]", "--format", "json")
    assert [x["tableau"] for x in json.loads(out)] == ["[[[1,2],[3]]]", "[[[1,3],[2]]]"]


def test_rep_json(capsys):
    code, out, _ = run(capsys, "rep", "--m", "2", "--n", "2", "--shape", "[[1],[1]]", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["generators"]["tau"] == [["v1", "0"], ["0", "v2"]]
    rep = rep_from_json(out)
    want = build_representation(MPartition.parse("[[1],[1]]"))
    assert all(x.equals(y) for (_, x), (_, y) in zip(rep.generators(), want.generators()))


@pytest.mark.parametrize("shape,params", [("[[1,1],[2]]", ()), ("[[2,1],[1]]", ("--q", "2", "--v", "1,3"))])
def test_rep_json_round_trip(capsys, shape, params):
    code, out, _ = run(capsys, "rep", "--shape", shape, "--format", "json", *params)
    rep = rep_from_json(out)
    assert rep_to_json(rep) == out.rstrip("\n")


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "rep", "--shape", "[[1,1],[2]]", "--format", "json")[1] for _ in range(2)}
    assert len(outs) == 1
    proc = [subprocess.run([sys.executable, "-m", "cyclohecke", "gram", "--shape", "[[1],[1,1]]", "--format", "json"],
                           capture_output=True, text=True, check=True).stdout for _ in range(2)]
    assert proc[0] == proc[1]


def test_usage_errors(capsys):
    code, _, err = run(capsys, "tableaux", "--shape", "[[1],[1]")
    assert code == 2 and "position" in err
    code, _, err = run(capsys, "rep", "--shape", "[[1],[1]]", "--n", "3")
    assert code == 2
    code, _, err = run(capsys, "rep", "--shape", "[[1],[1]]", "--q", "2", "--v", "1,4")
    assert code == 2 and "sesi2" in err
    code, _, _ = run(capsys, "rep", "--shape", "[[1],[1]]", "--q", "2")
    assert code == 2
    with pytest.raises(SystemExit) as ex:
        main(["nonsense"])
    assert ex.value.code == 2


def test_spec_check(capsys):
    assert run(capsys, "spec-check", "--q", "2", "--v", "1,3", "--n", "4")[0] == 0
    code, out, _ = run(capsys, "spec-check", "--q", "2", "--v", "1,4", "--n", "2", "--format", "json")
    assert code == 1 and not json.loads(out)["generic"]


def test_gram_and_jm(capsys):
    code, out, _ = run(capsys, "gram", "--shape", "[[1],[1]]", "--format", "json")
    assert code == 0 and set(json.loads(out)["diagonal"]) == {"0", "1"}
    code, out, _ = run(capsys, "jm", "--shape", "[[1],[1]]", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["diagonal"] and data["spectrum"][1]["eigenvalues"] == ["v2", "v1"]


def test_bratteli(capsys):
    code, out, _ = run(capsys, "bratteli", "--m", "2", "--depth", "2")
    assert code == 0 and len(json.loads(out)["levels"][2]) == 5
    code, out, _ = run(capsys, "bratteli", "--m", "1", "--depth", "1", "--dot")
    assert out.startswith("digraph") and out.count("->") == 1


def test_tensor(capsys):
    code, out, _ = run(capsys, "tensor", "[[2,1,1]]", "[[3,1]]", "--decompose")
    data = json.loads(out)
    assert code == 0 and data["decomposition"] == [{"shape": "[[2,1,1]]", "multiplicity": 3}]
    code, out, _ = run(capsys, "tensor", "[[1],[1]]", "[[2],[]]", "--dump")
    assert code == 0 and len(json.loads(out)["basis"]) == 2
    assert run(capsys, "tensor", "[[2,1]]", "[[2]]")[0] == 2


def test_idempotents_and_trace(capsys):
    code, out, _ = run(capsys, "idempotents", "--shape", "[[1],[1]]", "--format", "json")
    assert code == 0 and [r["rank"] for r in json.loads(out)["idempotents"]] == [1, 1]
    code, out, _ = run(capsys, "trace", "--shape", "[[2,1,1]]", "--word", "sigma1 sigma3")
    assert code == 0 and out.strip() == "-2 + q^-2"
    assert run(capsys, "trace", "--shape", "[[2,1]]", "--word", "sigma7")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "appendixC")
    assert code == 0 and out.strip().endswith("0 failed")
    code, out, _ = run(capsys, "verify", "--suite", "relations", "--m", "3", "--max-n", "3",
                       "--q", "2", "--v", "1,3,5", "--jobs", "2")
    assert code == 0


def test_verify_all_default():
    proc = subprocess.run([sys.executable, "-m", "cyclohecke", "verify", "--suite", "all", "--m", "2", "--max-n", "4"],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stdout[-2000:]


def test_verify_reports_failure(capsys, monkeypatch):
    from cyclohecke import suites

    monkeypatch.setattr(suites, "run_task", lambda task: [suites.Check("x", "forced", False, "broken")])
    code, out, _ = run(capsys, "verify", "--suite", "dimensions", "--max-n", "1")
    assert code == 1 and "FAIL [x] forced" in out
