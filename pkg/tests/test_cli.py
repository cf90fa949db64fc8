import io
import json
import subprocess
import sys

import pytest

from berge.cli import run
from berge.core import Hypergraph


def invoke(argv, stdin="", monkeypatch=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    return run(argv)


@pytest.fixture(autouse=True)
def _cache(tmp_path, monkeypatch):
    monkeypatch.setenv("BERGE_CACHE_DIR", str(tmp_path / "cache"))


def test_construct_and_check_pipeline():
    cons = subprocess.run([sys.executable, "-m", "berge", "construct", "linear", "--n", "48", "--r", "4"],
                          capture_output=True, text=True, check=True).stdout
    out = subprocess.run([sys.executable, "-m", "berge", "check", "--pattern", "K5"],
                         input=cons, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "FREE"
    assert len(json.loads(cons)["hyperedges"]) == 18


def test_check_prints_certificate_and_verify(tmp_path, capsys, monkeypatch):
    host = Hypergraph.from_sets(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    hp = tmp_path / "h.json"
    hp.write_text(host.to_json())
    assert invoke(["check", "--host", str(hp), "--pattern", "K3"], monkeypatch=monkeypatch) == 0
    cert = capsys.readouterr().out
    cp = tmp_path / "c.json"
    cp.write_text(cert)
    assert invoke(["verify", "--host", str(hp), "--pattern", "K3", "--cert", str(cp)],
                  monkeypatch=monkeypatch) == 0
    assert capsys.readouterr().out.strip() == "VALID"
    bad = json.loads(cert)
    first = next(iter(bad["phi"]))
    bad["phi"] = {k: bad["phi"][first] for k in bad["phi"]}
    cp.write_text(json.dumps(bad))
    assert invoke(["verify", "--host", str(hp), "--pattern", "K3", "--cert", str(cp)],
                  monkeypatch=monkeypatch) == 1


def test_count(capsys, monkeypatch):
    host = Hypergraph.from_sets(5, [(0, 1, 2), (2, 3, 4)]).to_json()
    assert invoke(["count", "--pattern", "P3"], host, monkeypatch) == 0
    assert json.loads(capsys.readouterr().out) == {"count": 10}


def test_pattern_from_json_file(tmp_path, capsys, monkeypatch):
    pat = tmp_path / "p.json"
    pat.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}))
    host = Hypergraph.from_sets(3, [(0, 1, 2)]).to_json()
    assert invoke(["check", "--pattern", str(pat)], host, monkeypatch) == 0
    assert capsys.readouterr().out.strip() == "FREE"


def test_input_errors(capsys, monkeypatch):
    assert invoke(["check", "--pattern", "K3"], "{not json", monkeypatch) == 2
    assert invoke(["check", "--pattern", "Q9"], '{"n": 3, "hyperedges": []}', monkeypatch) == 2
    bad = json.dumps({"n": 3, "hyperedges": [[0, 1, 2], [2, 1, 0]]})
    assert invoke(["check", "--pattern", "K3"], bad, monkeypatch) == 2
    assert invoke(["construct", "linear", "--n", "5", "--r", "3"], monkeypatch=monkeypatch) == 2


def test_resource_refusals(monkeypatch):
    assert invoke(["search", "--mode", "hypergraph", "--n", "9", "--r", "3", "--pattern", "K3"],
                  monkeypatch=monkeypatch) == 3
    from berge.construct import linear_construction
    host = json.dumps(linear_construction(48, 2).to_dict())
    assert invoke(["check", "--pattern", "C5", "--node-limit", "5"], host, monkeypatch) == 3


def test_construct_verify(capsys, monkeypatch):
    assert invoke(["construct", "clique-blowup", "--n", "24", "--s", "3", "--r", "4", "--verify"],
                  monkeypatch=monkeypatch) == 0
    out = capsys.readouterr()
    d = json.loads(out.out)
    assert d["construction"]["name"] == "clique_blowup"
    assert "FAIL" not in out.err
    assert invoke(["construct", "c4", "--q", "2"], monkeypatch=monkeypatch) == 0
    assert len(json.loads(capsys.readouterr().out)["hyperedges"]) == 21


def test_search_csv_and_json(capsys, monkeypatch):
    assert invoke(["search", "--mode", "graph", "--n", "4:6", "--pattern", "K3", "--csv"],
                  monkeypatch=monkeypatch) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["n,r,pattern,mode,value", "4,2,K3,graph,4", "5,2,K3,graph,6", "6,2,K3,graph,9"]
    assert invoke(["search", "--mode", "hypergraph", "--n", "4", "--r", "3", "--pattern", "K3",
                   "--no-cache"], monkeypatch=monkeypatch) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 2


def test_bounds_and_ramsey(capsys, monkeypatch):
    assert invoke(["bounds", "--pattern", "K3", "--threads", "1"], monkeypatch=monkeypatch) == 0
    out = capsys.readouterr()
    assert json.loads(out.out)["final_upper"]["value"] == 5
    assert "[5, 5]" in out.err
    assert invoke(["ramsey", "--g1", "K3", "--g2", "K3", "--threads", "1"], monkeypatch=monkeypatch) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 6


@pytest.mark.parametrize("argv", [
    ["construct", "linear", "--n", "24", "--r", "3"],
    ["construct", "clique-blowup", "--n", "24", "--s", "3", "--r", "4"],
    ["construct", "admissible-blowup", "--n", "36", "--c", "3", "--t", "3", "--r", "6"],
    ["construct", "c4", "--q", "2"],
])
def test_pipe_construct_into_check(argv, capsys, monkeypatch):
    assert invoke(argv, monkeypatch=monkeypatch) == 0
    cons = capsys.readouterr().out
    for name in json.loads(cons)["claims"]["free_of"]:
        assert invoke(["check", "--pattern", name], cons, monkeypatch) == 0
        assert capsys.readouterr().out.strip() == "FREE", name
