from __future__ import annotations

import random

import pytest

from surfcolor import graphs
from surfcolor import io as fmt
from surfcolor.coloring import DefectVector
from surfcolor.embedding import euler_genus, random_embedding, trace_faces
from surfcolor.errors import FormatError


def test_embedding_round_trip(k4, k7, grid, k5):
    rng = random.Random(2)
    samples = [k4, k7, grid, k5] + [random_embedding(rng.randint(3, 9), rng.randint(0, 12), rng) for _ in range(30)]
    for G in samples:
        H = fmt.parse_embedding(fmt.format_embedding(G))
        assert H.adj == G.adj
        assert euler_genus(H) == euler_genus(G)
        assert len(trace_faces(H)) == len(trace_faces(G))
        assert fmt.format_embedding(H) == fmt.format_embedding(G)


def test_bare_edge_ids():
    text = "# triangle\nv 0: 0 2\nv 1: 0 1\nv 2: 1 2\n"
    G = fmt.parse_embedding(text)
    assert G.adj == graphs.complete_graph(3)
    assert euler_genus(G) == 0


def test_signs_are_read():
    G = fmt.parse_embedding("v 0: 0.0\nv 1: 0.1 1.0\nv 2: 1.1\ns 1 -\n")
    assert G.sign(1) == -1 and G.sign(0) == 1


@pytest.mark.parametrize(
    "text,line,message",
    [
        ("v 0: 0.0\nv 1 0.1\n", 2, "expected 'v"),
        ("v 0: 0.0\nv 0: 0.1\n", 2, "listed twice"),
        ("v 0: x.0\n", 1, "edge id"),
        ("v 0: 0 0 0\n", 1, "more than twice"),
        ("v 0: 0.0\nv 1: 0.1\ns 0 ?\n", 3, "expected 's"),
        ("v 0: 0.0\np 2 1\n", 2, "unexpected record"),
    ],
)
def test_embedding_format_errors(text, line, message):
    with pytest.raises(FormatError, match=message) as info:
        fmt.parse_embedding(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_invalid_rotation_is_a_format_error():
    with pytest.raises(FormatError, match="invalid rotation system"):
        fmt.parse_embedding("v 0: 0.0\nv 1: 1.1\n")


def test_edge_list_round_trip():
    adj = graphs.complete_graph(5)
    text = fmt.format_edge_list(adj)
    assert text.splitlines()[0] == "p 5 10"
    assert fmt.parse_edge_list(text) == adj


@pytest.mark.parametrize(
    "text,message",
    [
        ("e 0 1\n", "before 'p'"),
        ("p 2 1\ne 0 2\n", "outside"),
        ("p 2 1\ne 0 0\n", "loop"),
        ("p 2 2\ne 0 1\ne 1 0\n", "repeated"),
        ("p 2 2\ne 0 1\n", "promises 2"),
        ("# nothing\n", "header"),
    ],
)
def test_edge_list_errors(text, message):
    with pytest.raises(FormatError, match=message):
        fmt.parse_edge_list(text)


def test_relabel_dense_and_format_guard():
    adj = {10: {30}, 30: {10, 20}, 20: {30}}
    dense, mapping = fmt.relabel_dense(adj)
    assert mapping == {10: 0, 20: 1, 30: 2}
    assert dense == {0: {2}, 1: {2}, 2: {0, 1}}
    with pytest.raises(FormatError, match="relabel"):
        fmt.format_edge_list(adj)


def test_sniff_and_parse_graph(k7):
    assert fmt.sniff("# c\np 1 0\n") == "edges"
    assert fmt.sniff(fmt.format_embedding(k7)) == "embedding"
    assert fmt.sniff("k 2 d 0,0\n") == "coloring"
    assert fmt.parse_graph("p 2 1\ne 0 1\n") == {0: {1}, 1: {0}}
    with pytest.raises(FormatError, match="empty"):
        fmt.sniff("\n# only a comment\n")
    with pytest.raises(FormatError, match="found a coloring"):
        fmt.parse_graph("k 1 d 0\n")


def test_coloring_round_trip():
    dv = DefectVector((2, 2, 0))
    col = {0: 1, 1: 3, 5: 2}
    got_dv, got = fmt.parse_coloring(fmt.format_coloring(dv, col))
    assert got_dv == dv and got == col


@pytest.mark.parametrize(
    "text,message",
    [
        ("c 0 1\n", "before 'k'"),
        ("k 2 d 0,0,0\n", "k = 2"),
        ("k 2 d 0,a\n", "bad defect list"),
        ("k 1 d 0\nc 0 1\nc 0 1\n", "twice"),
        ("", "missing"),
    ],
)
def test_coloring_errors(text, message):
    with pytest.raises(FormatError, match=message):
        fmt.parse_coloring(text)


def test_meta_round_trip():
    meta = {"family": "g1", "k": 2, "roots": [1, 2, 3], "claim_status": None}
    assert fmt.parse_meta(fmt.format_meta(meta)) == meta
    with pytest.raises(FormatError, match="line 1"):
        fmt.parse_meta("k {oops\n")
    with pytest.raises(FormatError, match="single word"):
        fmt.format_meta({"two words": 1})
