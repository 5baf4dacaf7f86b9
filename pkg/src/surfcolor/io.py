"""Text formats: embeddings, edge lists, colorings and ``key value`` metadata.

Embedding::

    # comment
    v 0: 0.0 1.0 2.0        cyclic list of darts ``<edge>.<end>`` at vertex 0
    v 1: 0.1 3.0 ...
    s 4 -                   sign of edge 4 (edges not listed are +)

A bare edge id ``e`` is allowed instead of ``e.end``; its first
appearance is end 0 and its second end 1.

Edge list (vertices ``0 .. n-1``)::

    p <n> <m>
    e <u> <v>

Coloring::

    k <k> d <d_1,...,d_k>
    c <vertex> <color>

Metadata: one ``key value`` per line, ``value`` JSON-encoded.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from pathlib import Path

from . import graphs
from .coloring.defects import Coloring, DefectVector
from .embedding import EmbeddedGraph, build_embedding
from .errors import EmbeddingError, FormatError
from .graphs import Adjacency


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {tok!r}", line=no) from None


def sniff(text: str) -> str:
    """``"embedding"``, ``"edges"`` or ``"coloring"`` from the first record."""
    for no, toks in _lines(text):
        kind = {"v": "embedding", "s": "embedding", "p": "edges", "e": "edges", "k": "coloring"}.get(toks[0])
        if kind is None:
            raise FormatError(f"unknown record type {toks[0]!r}", line=no)
        return kind
    raise FormatError("empty input")


# -- embeddings ---------------------------------------------------------------


def parse_embedding(text: str) -> EmbeddedGraph:
    rotations: dict[int, list[tuple[int, int]]] = {}
    signs: dict[int, int] = {}
    appearances: dict[int, int] = {}
    for no, toks in _lines(text):
        head = toks[0]
        if head == "v":
            if len(toks) < 2 or not toks[1].endswith(":"):
                raise FormatError("expected 'v <id>: <dart> ...'", line=no)
            v = _int(toks[1][:-1], no, "vertex id")
            if v in rotations:
                raise FormatError(f"vertex {v} listed twice", line=no)
            darts = []
            for tok in toks[2:]:
                if "." in tok:
                    e_txt, end_txt = tok.split(".", 1)
                    e, end = _int(e_txt, no, "edge id"), _int(end_txt, no, "dart end")
                else:
                    e = _int(tok, no, "edge id")
                    end = appearances.get(e, 0)
                    if end > 1:
                        raise FormatError(f"edge {e} appears more than twice", line=no)
                appearances[e] = appearances.get(e, 0) + 1
                darts.append((e, end))
            rotations[v] = darts
        elif head == "s":
            if len(toks) != 3 or toks[2] not in ("+", "-", "+1", "-1", "1"):
                raise FormatError("expected 's <edge> +|-'", line=no)
            e = _int(toks[1], no, "edge id")
            if e in signs:
                raise FormatError(f"sign of edge {e} given twice", line=no)
            signs[e] = -1 if toks[2].startswith("-") else 1
        else:
            raise FormatError(f"unexpected record {head!r} in embedding", line=no)
    if not rotations:
        raise FormatError("embedding has no vertices")
    try:
        return build_embedding(rotations, signs)
    except EmbeddingError as exc:
        raise FormatError(f"invalid rotation system: {exc}") from exc


def format_embedding(G: EmbeddedGraph) -> str:
    out = []
    for v in G.vertices:
        darts = " ".join(f"{d >> 1}.{d & 1}" for d in G.rotation(v))
        out.append(f"v {v}: {darts}".rstrip())
    out.extend(f"s {e} -" for e in range(G.num_edges) if G.sign(e) < 0)
    return "\n".join(out) + "\n"


# -- edge lists ---------------------------------------------------------------


def parse_edge_list(text: str) -> Adjacency:
    header = None
    adj: Adjacency = {}
    count = 0
    for no, toks in _lines(text):
        if toks[0] == "p":
            if header is not None or len(toks) != 3:
                raise FormatError("expected a single 'p <n> <m>' header", line=no)
            header = (_int(toks[1], no, "n"), _int(toks[2], no, "m"))
            adj = {v: set() for v in range(header[0])}
        elif toks[0] == "e":
            if header is None:
                raise FormatError("edge before 'p' header", line=no)
            if len(toks) != 3:
                raise FormatError("expected 'e <u> <v>'", line=no)
            u, v = _int(toks[1], no, "vertex"), _int(toks[2], no, "vertex")
            for x in (u, v):
                if x not in adj:
                    raise FormatError(f"vertex {x} outside 0..{header[0] - 1}", line=no)
            if u == v:
                raise FormatError(f"loop at {u}", line=no)
            if v in adj[u]:
                raise FormatError(f"repeated edge {u}-{v}", line=no)
            adj[u].add(v)
            adj[v].add(u)
            count += 1
        else:
            raise FormatError(f"unexpected record {toks[0]!r} in edge list", line=no)
    if header is None:
        raise FormatError("missing 'p <n> <m>' header")
    if count != header[1]:
        raise FormatError(f"header promises {header[1]} edges, found {count}")
    return adj


def relabel_dense(adj: Mapping[int, Iterable[int]]) -> tuple[Adjacency, dict[int, int]]:
    """Renumber vertices ``0 .. n-1`` in increasing id order; returns the graph and old -> new."""
    new = {v: i for i, v in enumerate(sorted(adj))}
    return {new[v]: {new[u] for u in adj[v]} for v in adj}, new


def format_edge_list(adj: Mapping[int, Iterable[int]]) -> str:
    if sorted(adj) != list(range(len(adj))):
        raise FormatError("edge-list output needs vertices 0..n-1; relabel first")
    edges = graphs.edge_list(adj)
    out = [f"p {len(adj)} {len(edges)}"]
    out.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


# -- graphs of either kind ----------------------------------------------------


def parse_graph(text: str):
    """An :class:`EmbeddedGraph` or a plain adjacency dict, by the file's first record."""
    kind = sniff(text)
    if kind == "embedding":
        return parse_embedding(text)
    if kind == "edges":
        return parse_edge_list(text)
    raise FormatError("expected a graph, found a coloring file")


def read_text(path) -> str:
    return Path(path).read_text()


# -- colorings ---------------------------------------------------------------


def parse_coloring(text: str) -> tuple[DefectVector, Coloring]:
    defects = None
    coloring: Coloring = {}
    for no, toks in _lines(text):
        if toks[0] == "k":
            if defects is not None or len(toks) != 4 or toks[2] != "d":
                raise FormatError("expected a single 'k <k> d <d1,...>' header", line=no)
            k = _int(toks[1], no, "k")
            try:
                defects = DefectVector(tuple(int(x) for x in toks[3].split(",")))
            except ValueError as exc:
                raise FormatError(f"bad defect list {toks[3]!r}: {exc}", line=no) from None
            if defects.k != k:
                raise FormatError(f"k = {k} but {defects.k} defects given", line=no)
        elif toks[0] == "c":
            if defects is None:
                raise FormatError("color before 'k' header", line=no)
            if len(toks) != 3:
                raise FormatError("expected 'c <vertex> <color>'", line=no)
            v, c = _int(toks[1], no, "vertex"), _int(toks[2], no, "color")
            if v in coloring:
                raise FormatError(f"vertex {v} colored twice", line=no)
            coloring[v] = c
        else:
            raise FormatError(f"unexpected record {toks[0]!r} in coloring", line=no)
    if defects is None:
        raise FormatError("missing 'k <k> d <...>' header")
    return defects, coloring


def format_coloring(defects: DefectVector, coloring: Mapping[int, int]) -> str:
    out = [f"k {defects.k} d {defects}"]
    out.extend(f"c {v} {coloring[v]}" for v in sorted(coloring))
    return "\n".join(out) + "\n"


# -- metadata -----------------------------------------------------------------


def format_meta(meta: Mapping[str, object]) -> str:
    out = []
    for key in sorted(meta):
        if not key or any(ch.isspace() for ch in key):
            raise FormatError(f"metadata key {key!r} must be a single word")
        out.append(f"{key} {json.dumps(meta[key], sort_keys=True)}")
    return "\n".join(out) + "\n"


def parse_meta(text: str) -> dict[str, object]:
    meta = {}
    for no, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        key, _, value = raw.partition(" ")
        try:
            meta[key] = json.loads(value)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad value for {key}: {exc.msg}", line=no) from None
    return meta
