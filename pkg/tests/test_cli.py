import io
import json
import sys

import pytest

from eulercat import builders as B
from eulercat.cli import main
from eulercat.formats import dump_category, dump_endofunctor, dump_set_functor
from eulercat.lefschetz import endofunctor


def run(argv, stdin="", capsys=None, monkeypatch=None):
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cat_files(tmp_path):
    paths = {}
    for name, C in [("f3", B.fin_sets(3)), ("s3", B.sphere_poset(3)), ("nw", B.no_weighting_example()),
                    ("L", B.pushout_shape()), ("c3", B.chain(3)), ("z3", B.cyclic_group(3))]:
        p = tmp_path / f"{name}.fincat"
        p.write_text(dump_category(C))
        paths[name] = str(p)
    return paths


def test_build_pipe_mobius(capsys, monkeypatch):
    code, out, _ = run(["build", "fin_sets", "3"], capsys=capsys)
    assert code == 0
    code, out, _ = run(["mobius", "-"], stdin=out, capsys=capsys, monkeypatch=monkeypatch)
    assert code == 0
    header, row1 = out.splitlines()[:2]
    assert header.split() == ["1", "2", "3"]
    assert row1.split()[2] == "-5/2"


def test_euler_sphere(cat_files, capsys):
    assert run(["euler", cat_files["s3"]], capsys=capsys)[:2] == (0, "0\n")


def test_no_weighting_exit_code(cat_files, capsys):
    code, out, err = run(["weighting", cat_files["nw"]], capsys=capsys)
    assert code == 1
    assert "reason: NO_WEIGHTING" in err


def test_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.fincat"
    p.write_text("objects: a\nnonsense\n")
    code, _, err = run(["validate", str(p)], capsys=capsys)
    assert code == 2 and "bad.fincat:2" in err


def test_missing_file(capsys):
    assert run(["euler", "/nonexistent/x.fincat"], capsys=capsys)[0] == 2


def test_no_mobius_inversion(tmp_path, capsys):
    p = tmp_path / "cd.fincat"
    p.write_text(dump_category(B.codiscrete(2)))
    code, _, err = run(["mobius", str(p)], capsys=capsys)
    assert code == 1 and "NO_MOBIUS_INVERSION" in err


def test_json_output(cat_files, capsys):
    code, out, _ = run(["--json", "weighting", cat_files["L"]], capsys=capsys)
    d = json.loads(out)
    assert d["kind"] == "unique" and d["particular"] == ["-1", "1", "1"]


def test_output_file(cat_files, tmp_path, capsys):
    dest = tmp_path / "out.txt"
    run(["-o", str(dest), "zeta", cat_files["c3"]], capsys=capsys)
    assert dest.read_text().splitlines()[1].split() == ["0", "1", "1", "1"]


def test_deterministic_output(cat_files, capsys):
    a = run(["mobius-fs", "--fin-sets", cat_files["f3"]], capsys=capsys)
    b = run(["mobius-fs", "--fin-sets", cat_files["f3"]], capsys=capsys)
    assert a == b and a[0] == 0


@pytest.mark.parametrize("verb,key", [
    ("zeta", "c3"), ("mobius-paths", "c3"), ("coweighting", "L"), ("nerve-euler", "s3"), ("profile", "z3"),
    ("op", "L"), ("adjoin", "c3"), ("cll", "c3"), ("validate", "f3"),
])
def test_single_file_verbs(verb, key, cat_files, capsys):
    assert run([verb, cat_files[key]], capsys=capsys)[0] == 0


def test_multi_file_verbs(cat_files, capsys):
    assert run(["sum", cat_files["L"], cat_files["c3"]], capsys=capsys)[0] == 0
    assert run(["product", cat_files["L"], cat_files["c3"]], capsys=capsys)[0] == 0
    assert run(["interval", cat_files["c3"], "0", "1"], capsys=capsys)[0] == 0


def test_cll_on_group_is_negative(cat_files, capsys):
    code, _, err = run(["cll", cat_files["z3"]], capsys=capsys)
    assert code == 1 and "NOT_INVERTIBLE" in err


def test_functor_verbs(tmp_path, capsys):
    p = tmp_path / "x.finfun"
    X = B.pushout_data(["1"], ["1", "2"], ["1", "3"], {"1": "1"}, {"1": "1"})
    p.write_text(dump_set_functor(X))
    assert run(["colim", str(p)], capsys=capsys)[1].startswith("3 classes")
    assert run(["colim-card", str(p)], capsys=capsys)[1] == "union-find: 3\nweighted: 3\n"
    assert run(["nondegen", str(p)], capsys=capsys)[1] == "nondegenerate\n"
    assert run(["fr", str(p)], capsys=capsys)[1] == "a  1\nb1  1\nb2  1\n"
    assert run(["repcoeffs", str(p)], capsys=capsys)[0] == 0
    assert run(["chi-elements", str(p)], capsys=capsys)[1] == "3\n"
    assert run(["elements", str(p)], capsys=capsys)[0] == 0
    assert run(["tensor", str(p), str(p)], capsys=capsys)[0] == 2  # wrong variance


def test_endofunctor_verbs(tmp_path, capsys):
    p = tmp_path / "f.endo"
    p.write_text(dump_endofunctor(endofunctor(B.chain(3), {"0": "1", "1": "1", "2": "2"})))
    # fixed points 1 < 2 form a chain
    assert run(["lefschetz", str(p)], capsys=capsys)[1] == "1\n"
    for verb in ("fix", "alg", "coalg"):
        assert run([verb, str(p)], capsys=capsys)[0] == 0


def test_graph_verbs(tmp_path, capsys):
    p = tmp_path / "g.digraph"
    p.write_text("vertex a\nvertex b\nedge e1: a -> b\nedge e2: a -> b\n")
    assert run(["graph-euler", str(p)], capsys=capsys)[1] == "0\n"
    assert run(["free-cat", str(p)], capsys=capsys)[0] == 0
    p.write_text("vertex a\nedge e: a -> a\n")
    code, _, err = run(["free-cat", str(p)], capsys=capsys)
    assert code == 2 and "CYCLIC_GRAPH" in err


def test_galois_check_verb(tmp_path, capsys):
    a, b, m = tmp_path / "a.fincat", tmp_path / "b.fincat", tmp_path / "m.txt"
    a.write_text(dump_category(B.chain(3)))
    b.write_text(dump_category(B.boolean_lattice(2)))
    m.write_text("F 0 -> S\nF 1 -> S1\nF 2 -> S12\nG S -> 0\nG S1 -> 1\nG S2 -> 0\nG S12 -> 2\n")
    code, out, _ = run(["galois-check", str(a), str(b), str(m)], capsys=capsys)
    assert code == 0 and "violations: 0" in out


def test_derangements_verb(capsys):
    out = run(["derangements", "5"], capsys=capsys)[1]
    assert out.splitlines()[-1].split() == ["5", "44", "44"]


def test_build_errors(capsys):
    assert run(["build", "nope"], capsys=capsys)[0] == 2
    assert run(["build", "symmetric_group", "9"], capsys=capsys)[0] == 2
    assert run(["build", "--functor", "symmetric_action", "2"], capsys=capsys)[0] == 0
