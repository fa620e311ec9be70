import json

import pytest

from jackpieri import __version__
from jackpieri.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_goldens(capsys):
    assert _run(capsys, "compute", "jack", "--r", "2", "--d", "2", "--partition", "2,0", "--format", "text")[:2] == (0, "m[2,0] + 1*m[1,1]\n")
    assert _run(capsys, "compute", "interp", "--r", "1", "--d", "2", "--partition", "2")[:2] == (0, "z1^2 - z1\n")
    code, out, _ = _run(capsys, "compute", "jack", "--partition", "2,0")
    assert out == "m[2,0] + (2*d/(d+2))*m[1,1]\n"


def test_compute_json_and_latex(capsys):
    code, out, _ = _run(capsys, "compute", "phi", "--r", "2", "--d", "1", "--partition", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["tool_version"] == __version__ and doc["config"]["partition"] == "1,0"
    code, out, _ = _run(capsys, "compute", "jack", "--d", "1", "--partition", "1,1", "--format", "latex")
    assert out.startswith("P_{(1,1)} = ")
    code, out, _ = _run(capsys, "compute", "kernel", "--r", "1", "--max-weight", "2", "--d", "1")
    assert code == 0 and len(out.splitlines()) == 3


def test_verify_exit_codes(capsys, tmp_path):
    assert _run(capsys, "verify", "mysterious-sum", "--r", "1", "--max-weight", "3", "--d", "1")[0] == 0
    code, _, err = _run(capsys, "verify", "no-such-suite")
    assert code == 2 and "mysterious-sum" in err
    assert _run(capsys, "verify", "binomial", "--d", "zero")[0] == 2
    assert _run(capsys, "compute", "jack", "--partition", "1,2")[0] == 2
    assert _run(capsys, "frobnicate")[0] == 2
    out = tmp_path / "r.json"
    code, _, _ = _run(capsys, "verify", "binomial", "--r", "2", "--max-weight", "2", "--d", "1", "--format", "json", "--out", str(out))
    doc = json.loads(out.read_text())
    assert code == 0
    assert doc["results"][0]["suite"] == "binomial" and doc["results"][0]["failed"] == 0


def test_parallel_matches_serial(capsys, monkeypatch):
    args = ("verify", "all", "--r", "2", "--max-weight", "1", "--d", "1", "--format", "json")
    serial = _run(capsys, *args)[1]
    monkeypatch.setenv("JACKPIERI_THREADS", "2")
    assert _run(capsys, *args)[1] == serial


def test_list_suites(capsys):
    code, out, _ = _run(capsys, "list-suites")
    assert code == 0 and "kernel-intertwining" in out
