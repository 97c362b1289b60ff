import json

import pytest

from coxlat.cli import main
from coxlat.export import lattice_to_dict, to_dot
from coxlat.weak import weak_order


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_enumerate_prints_size(capsys):
    assert run(capsys, "enumerate", "--type", "B3") == (0, "48\n")


def test_enumerate_writes_outputs(tmp_path, capsys):
    j, d, f = tmp_path / "h3.json", tmp_path / "h3.dot", tmp_path / "h3.png"
    code, out = run(capsys, "enumerate", "--type", "H3", "--json", str(j), "--dot", str(d), "--figure", str(f))
    assert code == 0 and out == "120\n"
    data = json.loads(j.read_text())
    assert data["type"] == "H3" and len(data["elements"]) == 120
    assert len(data["covers"]) == 120 * 3 // 2
    assert d.read_text().startswith('digraph "H3"')
    assert f.stat().st_size > 0


def test_output_is_deterministic(capsys):
    _, a = run(capsys, "enumerate", "--type", "B3", "--json", "--polygons")
    _, b = run(capsys, "enumerate", "--type", "B3", "--json", "--polygons")
    assert a == b


def test_hom_apply(capsys):
    assert run(capsys, "hom", "--name", "sigma", "--n", "7", "--apply", "3(-4)65(-7)(-1)2") == (0, "28514763\n")
    code, out = run(capsys, "hom", "--name", "parabolic", "--type", "A7", "--J", "s1,s2,s4,s5,s6,s7",
                    "--apply", "58371426")
    assert out == "(312,25413)\n"
    code, out = run(capsys, "hom", "--name", "erase", "--type", "B8", "--E", "s3,s4",
                    "--apply", "(-4)(-2)71(-8)(-6)5(-3)")
    assert out == "((-4)(-2)1(-3),35142)\n"


def test_hom_verify(capsys):
    code, out = run(capsys, "hom", "--name", "delta", "--n", "3", "--verify", "exhaustive")
    assert code == 0 and "2304 pairs, ok" in out


def test_congruence_check_iso(capsys):
    code, out = run(capsys, "congruence", "--type", "H3", "--gens", "qrq,rqr", "--quotient", "--check-iso", "B3")
    assert code == 0 and "classes: 48" in out
    code, out = run(capsys, "congruence", "--type", "H3", "--gens", "qrq,rqr", "--check-iso", "A3")
    assert code == 1


def test_quotient_json(capsys):
    code, out = run(capsys, "quotient", "--type", "B3", "--gens", "s0s1s0,s1s0s1", "--json")
    lines = out.split("\n", 1)
    assert lines[0] == "24"
    assert len(json.loads(lines[1])["elements"]) == 24


def test_shards_check(capsys):
    code, out = run(capsys, "shards", "--type", "B3", "--check")
    assert code == 0 and "closure equals forcing poset: True" in out


def test_cambrian(capsys):
    code, out = run(capsys, "cambrian", "--type", "B3", "--cword", "s0,s1,s2", "--restrict-hom", "delta")
    assert out == "20 -> 14\ngenerators: s0s1s0\n"
    code, out = run(capsys, "cambrian", "--type", "A3", "--cword", "s1,s2,s3", "--sort", "s1s2s3s1s2s1")
    assert out.splitlines() == ["14", "s1s2s3s1s2s1: s1s2s3|s1s2|s1"]


def test_dominance(capsys):
    code, out = run(capsys, "dominance", "--from", "C3", "--to", "A3", "--induced-hom", "--verify")
    assert code == 0 and "verified: True" in out
    code, _ = run(capsys, "dominance", "--from", "A3", "--to", "B3")
    assert code == 1


def test_classify_report(capsys):
    code, out = run(capsys, "classify", "--from", "B3", "--to", "A3", "--report", "json")
    assert code == 0 and json.loads(out)["count"] == 4


def test_verify_paper(tmp_path, capsys):
    fig = tmp_path / "t.png"
    code, out = run(capsys, "verify-paper", "--suite", "h3", "--figure", str(fig))
    lines = [ln for ln in out.splitlines() if ln.startswith(("PASS", "FAIL"))]
    assert code == 0 and len(lines) == 18 and all(ln.startswith("PASS") for ln in lines)
    assert fig.stat().st_size > 0


def test_h4_needs_slow(capsys):
    code, out = run(capsys, "verify-paper", "--suite", "h4")
    assert code == 0 and "skipped" in out


@pytest.mark.parametrize("argv", [["bogus"], ["enumerate"], ["enumerate", "--type", "X9"],
                                  ["hom", "--name", "sigma"], ["cambrian", "--type", "A3", "--cword", "s1"]])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_dot_marks_contracted_edges():
    L = weak_order("A2")
    dot = to_dot(L, classes=[0, 0, 1, 2, 1, 3])
    assert dot.count("color=red") >= 1
    assert lattice_to_dict(L)["elements"][0] == {"word": [], "inv_size": 0}
