"""Cellular embeddings of simple graphs as signed rotation systems.

Edges are numbered ``0 .. m-1``.  Edge ``e`` joins ``ends[e][0]`` to
``ends[e][1]`` and owns the two darts ``2e`` (at its first end) and
``2e + 1`` (at its second end), so ``d ^ 1`` is the opposite dart of ``d``.
Each vertex carries the cyclic order of its darts, and each edge a sign.

Face tracing keeps a local orientation ``s``.  Leaving a vertex along dart
``d`` we arrive at ``d ^ 1``, multiply ``s`` by the sign of the edge, and
continue with the successor of ``d ^ 1`` in the rotation when ``s = +1`` or
with its predecessor when ``s = -1``.  All-positive systems are ordinary
orientable rotation systems; a negative edge reverses orientation.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from . import graphs
from .errors import EmbeddingError, InvariantError, NotACycleError, PreconditionError

log = logging.getLogger(__name__)


class Dart(NamedTuple):
    edge: int
    end: int

    @property
    def index(self) -> int:
        return 2 * self.edge + self.end

    @classmethod
    def from_index(cls, d: int) -> "Dart":
        return cls(d >> 1, d & 1)


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk of a face.

    ``darts[i]`` leaves ``vertices[i]``.  A face of an isolated vertex has no
    darts and the single vertex.
    """

    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)


class EmbeddedGraph:
    """Immutable signed rotation system of a simple graph."""

    __slots__ = ("_rotation", "_ends", "_signs", "_where", "_adj")

    def __init__(self, rotation: Mapping[int, Sequence[int]], ends: Sequence[tuple[int, int]], signs: Sequence[int]):
        self._rotation = {v: tuple(rotation[v]) for v in sorted(rotation)}
        self._ends = tuple((int(a), int(b)) for a, b in ends)
        self._signs = tuple(int(s) for s in signs)
        where = {}
        for v, rot in self._rotation.items():
            for i, d in enumerate(rot):
                where[d] = (v, i)
        self._where = where
        adj = {v: set() for v in self._rotation}
        for a, b in self._ends:
            adj[a].add(b)
            adj[b].add(a)
        self._adj = adj

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> list[int]:
        return list(self._rotation)

    @property
    def num_vertices(self) -> int:
        return len(self._rotation)

    @property
    def num_edges(self) -> int:
        return len(self._ends)

    @property
    def ends(self) -> tuple[tuple[int, int], ...]:
        return self._ends

    @property
    def signs(self) -> tuple[int, ...]:
        return self._signs

    @property
    def adj(self) -> dict[int, set[int]]:
        """Underlying simple graph (a fresh copy)."""
        return graphs.copy(self._adj)

    def neighbors(self, v: int) -> set[int]:
        return set(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._rotation[v])

    def rotation(self, v: int) -> tuple[int, ...]:
        return self._rotation[v]

    def sign(self, e: int) -> int:
        return self._signs[e]

    def dart_vertex(self, d: int) -> int:
        return self._ends[d >> 1][d & 1]

    def dart_head(self, d: int) -> int:
        """Vertex at the far end of dart ``d``."""
        return self._ends[d >> 1][1 - (d & 1)]

    def step(self, d: int, s: int) -> int:
        v, i = self._where[d]
        rot = self._rotation[v]
        return rot[(i + s) % len(rot)]

    def edge_between(self, u: int, v: int) -> int:
        for d in self._rotation[u]:
            if self.dart_head(d) == v:
                return d >> 1
        raise NotACycleError(f"{u} and {v} are not adjacent")

    def dart_from(self, u: int, v: int) -> int:
        e = self.edge_between(u, v)
        return 2 * e if self._ends[e][0] == u else 2 * e + 1

    @property
    def is_connected(self) -> bool:
        return graphs.is_connected(self._adj)

    def __eq__(self, other):
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return (self._rotation, self._ends, self._signs) == (other._rotation, other._ends, other._signs)

    def __hash__(self):
        return hash((tuple(self._rotation.items()), self._ends, self._signs))

    def __repr__(self):
        return f"EmbeddedGraph(n={self.num_vertices}, m={self.num_edges})"

    # -- derived constructions -------------------------------------------

    def flip(self, v: int) -> "EmbeddedGraph":
        """Reverse the rotation at ``v`` and negate the signs of its edges.

        The result describes the same embedding.
        """
        b = _MapBuilder(self)
        b.flip(v)
        return b.build()

    def delete_vertices(self, vs: Iterable[int]) -> "EmbeddedGraph":
        vs = set(vs)
        b = _MapBuilder(self)
        for e, (x, y) in list(b.ends.items()):
            if x in vs or y in vs:
                b.delete_edge(e)
        for v in vs:
            del b.rot[v]
        return b.build()

    def components(self) -> list["EmbeddedGraph"]:
        """Connected components as separate embeddings (edges renumbered)."""
        out = []
        for comp in graphs.components(self._adj):
            b = _MapBuilder(self)
            for v in list(b.rot):
                if v not in comp:
                    del b.rot[v]
            for e in list(b.ends):
                if b.ends[e][0] not in comp:
                    del b.ends[e]
                    del b.sign[e]
            out.append(b.build())
        return out

    @classmethod
    def from_neighbor_rotation(
        cls,
        rotation: Mapping[int, Sequence[int]],
        signs: Mapping[tuple[int, int], int] | None = None,
    ) -> "EmbeddedGraph":
        """Build from cyclic neighbor lists; edge ``(u, v)`` with ``u < v`` gets end 0 at ``u``.

        ``signs`` maps vertex pairs (either order) to -1 or +1; missing pairs are +1.
        """
        pairs = set()
        for v, nbrs in rotation.items():
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingError(f"vertex {v} lists a neighbor twice")
            for u in nbrs:
                if u == v:
                    raise EmbeddingError(f"loop at vertex {v}")
                if u not in rotation or v not in rotation[u]:
                    raise EmbeddingError(f"edge {v}-{u} is not listed at both ends")
                pairs.add((min(u, v), max(u, v)))
        ordered = sorted(pairs)
        index = {p: i for i, p in enumerate(ordered)}
        rot = {}
        for v, nbrs in rotation.items():
            rot[v] = [2 * index[(min(u, v), max(u, v))] + (0 if v < u else 1) for u in nbrs]
        sign_list = [1] * len(ordered)
        for (a, b), s in (signs or {}).items():
            key = (min(a, b), max(a, b))
            if key not in index:
                raise EmbeddingError(f"sign given for non-edge {a}-{b}")
            sign_list[index[key]] = _check_sign(s)
        return cls(rot, ordered, sign_list)


def _check_sign(s) -> int:
    if s not in (1, -1):
        raise EmbeddingError(f"edge sign must be +1 or -1, got {s!r}")
    return int(s)


def build_embedding(
    rotations: Mapping[int, Sequence[tuple[Hashable, int]]],
    signs: Mapping[Hashable, int] | None = None,
) -> EmbeddedGraph:
    """Validate a rotation system given as per-vertex cyclic lists of ``(edge, end)`` darts.

    Edge identifiers may be any sortable hashables; they are renumbered
    ``0 .. m-1`` in sorted order.  Missing signs default to +1.
    Disconnected inputs are accepted and logged.
    """
    seen: dict[tuple[Hashable, int], int] = {}
    for v, darts in rotations.items():
        for dart in darts:
            edge, end = dart
            if end not in (0, 1):
                raise EmbeddingError(f"dart {dart!r} at vertex {v}: end must be 0 or 1")
            if (edge, end) in seen:
                raise EmbeddingError(f"dart {edge}.{end} appears twice (vertices {seen[(edge, end)]} and {v})")
            seen[(edge, end)] = v
    edge_ids = sorted({e for e, _ in seen})
    ends = []
    pairs = set()
    for e in edge_ids:
        if (e, 0) not in seen or (e, 1) not in seen:
            raise EmbeddingError(f"edge {e} is missing a dart")
        a, b = seen[(e, 0)], seen[(e, 1)]
        if a == b:
            raise EmbeddingError(f"edge {e} is a loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in pairs:
            raise EmbeddingError(f"parallel edges between {a} and {b}")
        pairs.add(key)
        ends.append((a, b))
    for e in (signs or {}):
        if e not in set(edge_ids):
            raise EmbeddingError(f"sign given for unknown edge {e}")
    index = {e: i for i, e in enumerate(edge_ids)}
    rot = {v: [2 * index[e] + end for e, end in darts] for v, darts in rotations.items()}
    sign_list = [_check_sign((signs or {}).get(e, 1)) for e in edge_ids]
    g = EmbeddedGraph(rot, ends, sign_list)
    if not g.is_connected:
        log.warning("embedding has %d connected components", len(graphs.components(g.adj)))
    return g


# -- faces and genus ------------------------------------------------------


def trace_faces(G: EmbeddedGraph) -> list[FaceWalk]:
    faces = []
    visited: set[tuple[int, int]] = set()
    for v in G.vertices:
        rot = G.rotation(v)
        if not rot:
            faces.append(FaceWalk((), (v,)))
            continue
        for d0 in rot:
            for s0 in (1, -1):
                if (d0, s0) in visited:
                    continue
                walk = []
                d, s = d0, s0
                while True:
                    walk.append((d, s))
                    s = s * G.sign(d >> 1)
                    d = G.step(d ^ 1, s)
                    if (d, s) == (d0, s0):
                        break
                reverse = {(walk[i][0] ^ 1, -walk[(i + 1) % len(walk)][1]) for i in range(len(walk))}
                states = set(walk)
                if states & reverse or states & visited:
                    raise InvariantError("face tracing produced overlapping orbits")
                visited |= states | reverse
                darts = tuple(d for d, _ in walk)
                faces.append(FaceWalk(darts, tuple(G.dart_vertex(d) for d in darts)))
    return faces


def euler_characteristic(G: EmbeddedGraph) -> int:
    return G.num_vertices - G.num_edges + len(trace_faces(G))


def euler_genus(G: EmbeddedGraph) -> int:
    if not G.is_connected:
        raise PreconditionError("euler_genus needs a connected embedding; split into components first")
    g = 2 - euler_characteristic(G)
    if g < 0:
        raise InvariantError(f"negative Euler genus {g}")
    return g


def _orientation_flips(G: EmbeddedGraph) -> dict[int, int]:
    """Per-vertex flips normalising all spanning-forest edges to +1."""
    flips = {}
    adj = G.adj
    for comp in graphs.components(adj):
        dist, parent = graphs.bfs_order(adj, [min(comp)])
        for x in sorted(parent, key=lambda y: (dist[y], y)):
            p = parent[x]
            flips[x] = 1 if p is None else flips[p] * G.sign(G.edge_between(p, x))
    return flips


def is_orientable(G: EmbeddedGraph) -> bool:
    if not G.is_connected:
        raise PreconditionError("is_orientable needs a connected embedding")
    flips = _orientation_flips(G)
    return all(flips[a] * s * flips[b] == 1 for (a, b), s in zip(G.ends, G.signs))


# -- mutable helper for surgeries ------------------------------------------


class _MapBuilder:
    """Scratch copy of a rotation system that tolerates loops and multi-edges."""

    def __init__(self, G: EmbeddedGraph):
        self.rot = {v: list(G.rotation(v)) for v in G.vertices}
        self.ends = {e: list(G.ends[e]) for e in range(G.num_edges)}
        self.sign = {e: G.sign(e) for e in range(G.num_edges)}
        self.next_edge = G.num_edges
        self.next_vertex = (max(G.vertices) + 1) if G.vertices else 0

    def vertex_of(self, d: int) -> int:
        return self.ends[d >> 1][d & 1]

    def new_vertex(self) -> int:
        v = self.next_vertex
        self.next_vertex += 1
        self.rot[v] = []
        return v

    def flip(self, v: int) -> None:
        self.rot[v].reverse()
        for d in self.rot[v]:
            self.sign[d >> 1] *= -1

    def add_edge(self, u: int, iu: int, w: int, iw: int, sign: int) -> int:
        """Insert an edge whose darts land at index ``iu`` of ``u`` and ``iw`` of ``w``."""
        e = self.next_edge
        self.next_edge += 1
        self.ends[e] = [u, w]
        self.sign[e] = sign
        self.rot[u].insert(iu, 2 * e)
        self.rot[w].insert(iw, 2 * e + 1)
        return e

    def delete_edge(self, e: int) -> None:
        a, b = self.ends.pop(e)
        del self.sign[e]
        self.rot[a].remove(2 * e)
        self.rot[b].remove(2 * e + 1)

    def contract_edge(self, e: int, keep: int) -> None:
        a, b = self.ends[e]
        if a == b:
            raise InvariantError("cannot contract a loop")
        other = b if a == keep else a
        if self.sign[e] == -1:
            self.flip(other)
        dk = 2 * e if a == keep else 2 * e + 1
        do = dk ^ 1
        rk, ro = self.rot[keep], self.rot[other]
        i, j = rk.index(dk), ro.index(do)
        merged = rk[i + 1:] + rk[:i] + ro[j + 1:] + ro[:j]
        for d in ro:
            if d != do:
                self.ends[d >> 1][d & 1] = keep
        del self.rot[other]
        del self.ends[e]
        del self.sign[e]
        self.rot[keep] = merged

    def simplify(self) -> None:
        """Delete loops, then all but the lowest-numbered edge of each parallel class."""
        for e in sorted(self.ends):
            a, b = self.ends[e]
            if a == b:
                self.delete_edge(e)
        kept = set()
        for e in sorted(self.ends):
            a, b = self.ends[e]
            key = (min(a, b), max(a, b))
            if key in kept:
                self.delete_edge(e)
            else:
                kept.add(key)

    def relabel(self, old: int, new: int) -> None:
        if old == new:
            return
        if new in self.rot:
            raise InvariantError(f"vertex id {new} already in use")
        self.rot[new] = self.rot.pop(old)
        for d in self.rot[new]:
            self.ends[d >> 1][d & 1] = new

    def build(self) -> EmbeddedGraph:
        old = sorted(self.ends)
        index = {e: i for i, e in enumerate(old)}
        rot = {v: [2 * index[d >> 1] + (d & 1) for d in darts] for v, darts in self.rot.items()}
        ends = [tuple(self.ends[e]) for e in old]
        signs = [self.sign[e] for e in old]
        return EmbeddedGraph(rot, ends, signs)


# -- surgeries --------------------------------------------------------------


def contract_subgraph(G: EmbeddedGraph, H: Iterable[int], label: int | None = None) -> tuple[EmbeddedGraph, dict[int, int]]:
    """Contract the connected vertex set ``H`` to a single vertex.

    Tree edges of a BFS spanning tree of ``H`` are contracted one by one
    (which keeps the surface), then loops and parallel edges are deleted
    (which never increases Euler genus).  The new vertex is ``label`` or,
    by default, one more than the largest vertex id.  Returns the quotient
    and the map from old to new vertex ids.
    """
    H = set(H)
    if not H:
        raise PreconditionError("cannot contract an empty vertex set")
    missing = H - set(G.vertices)
    if missing:
        raise PreconditionError(f"vertices {sorted(missing)} are not in the graph")
    if not graphs.induces_connected(G.adj, H):
        raise PreconditionError("contracted vertex set must induce a connected subgraph")
    if label is None:
        label = max(G.vertices) + 1
    elif label in G.vertices and label not in H:
        raise PreconditionError(f"label {label} already names a vertex outside the contracted set")
    root = min(H)
    sub = graphs.induced(G.adj, H)
    dist, parent = graphs.bfs_order(sub, [root])
    b = _MapBuilder(G)
    for x in sorted(parent, key=lambda y: (dist[y], y)):
        if parent[x] is None:
            continue
        b.contract_edge(G.edge_between(parent[x], x), keep=root)
    b.simplify()
    b.relabel(root, label)
    vmap = {v: (label if v in H else v) for v in G.vertices}
    return b.build(), vmap


def identify_vertices(G: EmbeddedGraph, u: int, w: int) -> EmbeddedGraph:
    """Merge two non-adjacent vertices into ``u``, splicing their rotations.

    Every pair of corners (one at ``u``, one at ``w``) and both twist
    choices are tried; the splice of least resulting Euler genus wins,
    ties going to the lowest dart ids.  Merging at two corners of a common
    face keeps the genus.
    """
    if u == w:
        raise PreconditionError("cannot identify a vertex with itself")
    if w in G.neighbors(u):
        raise PreconditionError(f"{u} and {w} are adjacent")
    best = None
    for iu in range(max(1, G.degree(u))):
        for iw in range(max(1, G.degree(w))):
            for sign in (1, -1):
                b = _MapBuilder(G)
                e = b.add_edge(u, iu, w, iw, sign)
                b.contract_edge(e, keep=u)
                b.simplify()
                H = b.build()
                comps = H.components()
                genus = sum(euler_genus(c) for c in comps)
                du = G.rotation(u)[iu - 1] if G.degree(u) else -1
                dw = G.rotation(w)[iw - 1] if G.degree(w) else -1
                key = (genus, du, dw, -sign)
                if best is None or key < best[0]:
                    best = (key, H)
    return best[1]


@dataclass(frozen=True)
class CutResult:
    """Outcome of cutting along a cycle.

    ``faces`` lists the vertex sequences of the new faces capping the cut
    (one for a 1-sided cycle, two otherwise); ``origin`` maps each new
    vertex to the cycle vertex it copies.  Other vertices keep their ids.
    """

    graph: EmbeddedGraph
    faces: tuple[tuple[int, ...], ...]
    origin: dict[int, int]
    one_sided: bool

    def __iter__(self):
        return iter((self.graph, self.faces))


def cycle_sign(G: EmbeddedGraph, cycle: Sequence[int]) -> int:
    s = 1
    for i in range(len(cycle)):
        s *= G.sign(G.edge_between(cycle[i], cycle[(i + 1) % len(cycle)]))
    return s


def check_cycle(G: EmbeddedGraph, cycle: Sequence[int]) -> None:
    cycle = list(cycle)
    if len(cycle) < 3:
        raise NotACycleError("a cycle needs at least 3 vertices")
    if len(set(cycle)) != len(cycle):
        raise NotACycleError("cycle repeats a vertex")
    for i, v in enumerate(cycle):
        if v not in G.vertices:
            raise NotACycleError(f"vertex {v} is not in the graph")
        if cycle[(i + 1) % len(cycle)] not in G.neighbors(v):
            raise NotACycleError(f"{v} and {cycle[(i + 1) % len(cycle)]} are not adjacent")


def cut_along_cycle(G: EmbeddedGraph, cycle: Sequence[int]) -> CutResult:
    """Cut the surface along a cycle of ``G`` and cap every hole with a new face.

    Each cycle vertex is split into two copies, one per side.  For a
    2-sided cycle every cycle edge is doubled and the two copies of the
    cycle become two new faces.  For a 1-sided cycle the two sides join up
    and the new face runs twice around the cycle (length ``2L``).
    """
    cycle = list(getattr(cycle, "vertices", cycle))
    check_cycle(G, cycle)
    L = len(cycle)
    b = _MapBuilder(G)
    cyc_edges = [G.edge_between(cycle[i], cycle[(i + 1) % L]) for i in range(L)]
    for i in range(1, L):
        if b.sign[cyc_edges[i - 1]] == -1:
            b.flip(cycle[i])
    one_sided = b.sign[cyc_edges[-1]] == -1

    sides = []
    for i, v in enumerate(cycle):
        e_out, e_in = cyc_edges[i], cyc_edges[i - 1]
        rot = b.rot[v]
        x = 2 * e_out if b.ends[e_out][0] == v else 2 * e_out + 1
        y = 2 * e_in if b.ends[e_in][0] == v else 2 * e_in + 1
        k = rot.index(x)
        rot = rot[k:] + rot[:k]
        j = rot.index(y)
        sides.append((rot[1:j], rot[j + 1:]))

    for e in cyc_edges:
        b.delete_edge(e)
    for v in cycle:
        del b.rot[v]
    A = [b.new_vertex() for _ in range(L)]
    B = [b.new_vertex() for _ in range(L)]
    origin = {}
    for i, v in enumerate(cycle):
        origin[A[i]] = v
        origin[B[i]] = v
        for copy, darts in ((A[i], sides[i][0]), (B[i], sides[i][1])):
            for d in darts:
                b.ends[d >> 1][d & 1] = copy

    out_a, in_a, out_b, in_b = {}, {}, {}, {}
    for i in range(L):
        last = i == L - 1
        na = B[0] if (last and one_sided) else A[(i + 1) % L]
        nb = A[0] if (last and one_sided) else B[(i + 1) % L]
        s = -1 if (last and one_sided) else 1
        for tail, head, outs, ins in ((A[i], na, out_a, in_a), (B[i], nb, out_b, in_b)):
            e = b.next_edge
            b.next_edge += 1
            b.ends[e] = [tail, head]
            b.sign[e] = s
            outs[tail] = 2 * e
            ins[head] = 2 * e + 1
    for i in range(L):
        a_side, b_side = sides[i]
        arrive_a = in_a.get(A[i], in_b.get(A[i]))
        arrive_b = in_b.get(B[i], in_a.get(B[i]))
        b.rot[A[i]] = [out_a[A[i]], *a_side, arrive_a]
        b.rot[B[i]] = [arrive_b, *b_side, out_b[B[i]]]

    graph = b.build()
    faces = (tuple(A + B),) if one_sided else (tuple(A), tuple(B))
    return CutResult(graph, faces, origin, one_sided)


# -- random instances -------------------------------------------------------


def random_embedding(n: int, extra_edges: int, rng: random.Random, signed: bool = True) -> EmbeddedGraph:
    """Random connected simple graph with a uniformly random signed rotation system.

    A random spanning tree on ``n`` vertices plus up to ``extra_edges``
    further edges; rotations are shuffled and, if ``signed``, each sign is
    a fair coin.
    """
    adj = {v: set() for v in range(n)}
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        adj[a].add(b)
        adj[b].add(a)
    non_edges = [(a, b) for a in range(n) for b in range(a + 1, n) if b not in adj[a]]
    rng.shuffle(non_edges)
    for a, b in non_edges[:extra_edges]:
        adj[a].add(b)
        adj[b].add(a)
    rot = {}
    for v in range(n):
        nb = sorted(adj[v])
        rng.shuffle(nb)
        rot[v] = nb
    signs = {}
    if signed:
        for a, b in graphs.edge_list(adj):
            signs[(a, b)] = rng.choice((1, -1))
    return EmbeddedGraph.from_neighbor_rotation(rot, signs)
