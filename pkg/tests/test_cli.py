import json

import pytest

from hfree_mis.cli import main
from hfree_mis.generators import gnp
from hfree_mis.graph import complete_graph, cycle_graph, girth, read_graph, write_graph


@pytest.fixture
def c5(tmp_path):
    path = tmp_path / "c5.el"
    write_graph(cycle_graph(5), path)
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exact(capsys, c5):
    code, out, _ = run(capsys, "exact", "--in", c5)
    assert code == 0
    assert out.splitlines()[:2] == ["alpha 2", "set 0 2"]


def test_exact_clique(capsys, c5):
    _, out, _ = run(capsys, "exact", "--in", c5, "--clique")
    assert out.startswith("omega 2")


def test_exact_timeout_flag(capsys, tmp_path):
    path = tmp_path / "k.el"
    write_graph(gnp(40, 0.2, 0), path)
    _, out, _ = run(capsys, "exact", "--in", path, "--budget", "2")
    assert "timeout" in out


@pytest.mark.parametrize("algo, tag", [("ramsey", "ramsey"), ("peel", "comb-leaf"), ("greedy", "greedy"), ("ls", "local-opt")])
def test_approx(capsys, c5, algo, tag):
    code, out, _ = run(capsys, "approx", "--algo", algo, "--in", c5)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "size 2"
    assert lines[1] == f"certificate {tag}"


def test_approx_subst_and_eh(capsys, tmp_path):
    path = tmp_path / "k.el"
    write_graph(complete_graph(3), path)
    code, out, _ = run(capsys, "approx", "--algo", "subst", "--pattern", "K4", "--in", path, "--seed", "3", "--mode", "retry")
    assert code == 0 and out.startswith("size 1")
    code, out, _ = run(capsys, "approx", "--algo", "eh", "--in", path)
    assert code == 0 and "size 1" in out


def test_eh_on_non_cograph_is_an_error(capsys, c5):
    code, _, err = run(capsys, "approx", "--algo", "eh", "--in", c5)
    assert code == 2 and "not a cograph" in err


def test_verify(capsys, tmp_path, c5):
    good, bad = tmp_path / "good.txt", tmp_path / "bad.txt"
    good.write_text("0 2\n")
    bad.write_text("0 1\n")
    assert run(capsys, "verify", "--in", c5, "--set", good)[:2] == (0, "PASS\n")
    assert run(capsys, "verify", "--in", c5, "--set", bad)[:2] == (1, "FAIL\n")
    k2 = tmp_path / "k2.el"
    write_graph(complete_graph(2), k2)
    assert run(capsys, "verify", "--in", k2, "--set", bad)[1] == "FAIL\n"


def test_verify_missing_file(capsys, c5, tmp_path):
    code, _, err = run(capsys, "verify", "--in", c5, "--set", tmp_path / "missing.txt")
    assert code == 2 and "error" in err


def test_verify_parse_error(capsys, c5, tmp_path):
    s = tmp_path / "s.txt"
    s.write_text("0 x\n")
    code, _, err = run(capsys, "verify", "--in", c5, "--set", s)
    assert code == 2


def test_gen_gap_with_report(capsys, tmp_path):
    out = tmp_path / "g.el"
    code, _, _ = run(capsys, "gen", "--kind", "gap", "--base", "C5", "--s", "4", "--p", "0.5", "--gamma", "3", "--seed", "1", "--out", out)
    assert code == 0
    g = read_graph(out)
    assert girth(g) > 3
    report = json.loads((tmp_path / "g.el.report.jsonl").read_text())
    assert report["kind"] == "gap" and report["n_after"] == g.n


def test_gen_base_from_file(capsys, tmp_path, c5):
    out = tmp_path / "b.el"
    run(capsys, "gen", "--kind", "blowup", "--base", c5, "--s", "2", "--p", "1", "--out", out)
    assert read_graph(out).n == 10


@pytest.mark.parametrize("kind", ["process", "intersect"])
def test_gen_is_seed_deterministic(capsys, tmp_path, kind, monkeypatch):
    monkeypatch.setenv("HFREE_MIS_SEED", "5")
    texts = []
    for name in ("a.el", "b.el"):
        out = tmp_path / name
        run(capsys, "gen", "--kind", kind, "--n", "15", "--base", "K2", "--s", "6", "--p", "0.7", "--out", out)
        texts.append(out.read_text())
    assert texts[0] == texts[1]
    report = json.loads((tmp_path / "a.el.report.jsonl").read_text())
    assert report["seed"] == 5


def test_bench(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("corpus = edgeless\nn = 5\nalgo = greedy\n")
    out = tmp_path / "o.csv"
    code, stdout, _ = run(capsys, "bench", "--config", cfg, "--out", out)
    assert code == 0 and stdout == "1 records\n"
    assert out.read_text().splitlines()[2].startswith("0,edgeless(n=5),5,0,greedy,5,5,1.000000,")


def test_parse_error_reported(capsys, tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("2 1\n0 0\n")
    code, _, err = run(capsys, "exact", "--in", bad)
    assert code == 2 and "loop at line 2" in err
