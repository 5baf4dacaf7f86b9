from __future__ import annotations

import pytest

from surfcolor import graphs
from surfcolor import io as fmt
from surfcolor.cli import main
from surfcolor.coloring import DefectVector, verify_coloring


@pytest.fixture
def files(tmp_path, k4, k7, k5):
    paths = {}
    for name, G in (("k4", k4), ("k7", k7), ("k5", k5)):
        p = tmp_path / f"{name}.emb"
        p.write_text(fmt.format_embedding(G))
        paths[name] = str(p)
    for name, adj in (("K5", graphs.complete_graph(5)), ("C7", graphs.cycle_graph(7))):
        p = tmp_path / f"{name}.edges"
        p.write_text(fmt.format_edge_list(adj))
        paths[name] = str(p)
    paths["dir"] = tmp_path
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_genus(files, capsys):
    assert run(capsys, "genus", files["k4"])[:2] == (0, "eg 0\n")
    assert run(capsys, "genus", files["k7"])[:2] == (0, "eg 2\n")
    assert run(capsys, "genus", files["k5"])[:2] == (0, "eg 1\n")


def test_faces(files, capsys):
    code, out, _ = run(capsys, "faces", files["k5"])
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["faces 6", "chi 1", "orientable no"]
    assert len([line for line in lines if line.startswith("f ")]) == 6


def test_ncc(files, capsys):
    code, out, _ = run(capsys, "ncc", files["k7"])
    assert code == 0 and "length 3" in out
    assert run(capsys, "ncc", files["k4"])[:2] == (1, "NONE eg 0\n")


def test_classify(files, capsys):
    code, out, _ = run(capsys, "classify", files["k4"], "--cycle", "0,1,2")
    assert code == 0 and out.startswith("class ")
    code, _, err = run(capsys, "classify", files["k4"], "--cycle", "0,x")
    assert code == 2 and err.startswith("precondition error:")


def test_planarize(files, capsys):
    code, out, _ = run(capsys, "planarize", files["k7"], "--root", "0")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "eg 2" and "bound 14" in lines
    quotient = fmt.parse_edge_list("\n".join(line for line in lines if line.split()[0] in ("p", "e")))
    assert graphs.is_planar(quotient)
    assert run(capsys, "planarize", files["k4"], "--root", "0")[0] == 2


def test_color_and_verify(files, capsys, tmp_path):
    out_path = tmp_path / "k5.col"
    code, _, _ = run(capsys, "color", files["K5"], "--defects", "1,1,0", "--out", str(out_path))
    assert code == 0
    dv, col = fmt.parse_coloring(out_path.read_text())
    assert dv == DefectVector((1, 1, 0))
    assert verify_coloring(graphs.complete_graph(5), dv, col) == []
    assert run(capsys, "verify", files["K5"], str(out_path))[:2] == (0, "valid 1,1,0\n")
    code, out, _ = run(capsys, "verify", files["K5"], str(out_path), "--defects", "0,0,0")
    assert code == 1 and out.startswith("INVALID")


def test_color_unsat(files, capsys):
    code, out, _ = run(capsys, "color", files["K5"], "--defects", "0,0,0,0")
    assert code == 1
    assert out.splitlines()[0] == "UNSAT"
    code, out, _ = run(capsys, "color", files["C7"], "--defects", "0,0")
    assert code == 1 and out.startswith("UNSAT")


def test_color_pins(files, capsys):
    code, out, _ = run(capsys, "color", files["K5"], "--defects", "0,0,0,0,0", "--pin", "0=1", "--pin", "1=1")
    assert code == 1 and "reason pins:" in out
    code, out, _ = run(capsys, "color", files["K5"], "--defects", "0,0,0,0,0", "--pin", "0=2|3")
    assert code == 0
    _, col = fmt.parse_coloring(out)
    assert col[0] in (2, 3)
    assert run(capsys, "color", files["K5"], "--defects", "0,0", "--pin", "0-1")[0] == 2


def test_color_pipeline(files, capsys):
    for pipeline in ("000", "22"):
        code, out, _ = run(capsys, "color", files["k7"], "--pipeline", pipeline)
        assert code == 0
        dv, col = fmt.parse_coloring(out)
        assert dv.defects[-1] == 14
        assert verify_coloring(graphs.complete_graph(7), dv, col) == []
    assert run(capsys, "color", files["K5"], "--pipeline", "000")[0] == 2


def test_color_is_deterministic(files, capsys):
    first = run(capsys, "color", files["k7"], "--defects", "1,1,1")
    assert all(run(capsys, "color", files["k7"], "--defects", "1,1,1") == first for _ in range(3))


def test_threshold(capsys):
    code, out, _ = run(capsys, "threshold", "--family", "linear", "--genus", "1")
    assert code == 0 and "K 5" in out.splitlines()
    code, out, _ = run(capsys, "threshold", "--family", "2kk", "--genus", "1")
    assert "exact 38+sqrt(1766)" in out and "residual 1" in out and "defect 80" in out


def test_generate(files, capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "--family", "g1", "--k", "2", "--count-only")
    assert code == 0 and "edges 126" in out.splitlines()
    target = tmp_path / "ts.edges"
    code, out, _ = run(capsys, "generate", "--family", "twostar7", "--k", "1", "--out", str(target), "--check")
    assert code == 0 and "edges 81" in out
    adj = fmt.parse_edge_list(target.read_text())
    assert graphs.num_edges(adj) == 81 and graphs.girth(adj) >= 7
    meta = fmt.parse_meta((tmp_path / "ts.edges.meta").read_text())
    assert meta["claim_status"] == "verified" and meta["girth"] == 7
    code, out, _ = run(capsys, "generate", "--family", "descartes6", "--k", "0", "--sample", "2", "--seed", "4")
    assert code == 0 and out.startswith("# family descartes6 k 0 seed 4")
    assert run(capsys, "generate", "--family", "descartes6", "--k", "0")[0] == 2
    assert run(capsys, "generate", "--family", "g1", "--k", "1", "--sample", "2")[0] == 2


def test_generate_sprout_with_base(files, capsys):
    code, out, _ = run(capsys, "generate", "--family", "sprout", "--k", "1", "--base", files["C7"])
    assert code == 0
    assert graphs.num_edges(fmt.parse_edge_list(out)) == 7 + 7 * 14


def test_audit(files, capsys):
    code, out, _ = run(capsys, "audit", files["k7"], "--scheme", "s34", "--K", "38+sqrt(1766)")
    assert code == 0
    lines = out.splitlines()
    assert "initial_total 0" in lines and "final_total 0" in lines and "high 0" in lines
    code, out, _ = run(capsys, "audit", files["k7"], "--scheme", "s51", "--K", "3/2")
    assert code == 0 and "K 3/2" in out
    assert run(capsys, "audit", files["k7"], "--scheme", "s51", "--K", "big")[0] == 2


def test_error_exit_codes(files, capsys):
    code, _, err = run(capsys, "genus", str(files["dir"] / "missing.emb"))
    assert code == 2 and err.startswith("io error:")
    bad = files["dir"] / "bad.emb"
    bad.write_text("v 0: 0.0\nv 1 0.1\n")
    code, _, err = run(capsys, "genus", str(bad))
    assert code == 2 and err.startswith("format error:") and "line 2" in err
    code, _, err = run(capsys, "genus", files["K5"])
    assert code == 2 and "needs an embedding" in err
