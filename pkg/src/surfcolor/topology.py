"""Cycle classification and shortest non-contractible cycles on embedded graphs."""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from . import graphs
from .embedding import EmbeddedGraph, check_cycle, cut_along_cycle, cycle_sign, euler_genus
from .errors import InvariantError, PreconditionError


class CycleClass(str, enum.Enum):
    CONTRACTIBLE = "contractible"
    TWO_SIDED_SEPARATING = "two_sided_separating"
    TWO_SIDED_NONSEPARATING = "two_sided_nonseparating"
    ONE_SIDED = "one_sided"


@dataclass(frozen=True)
class CycleWalk:
    vertices: tuple[int, ...]
    darts: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    @classmethod
    def from_vertices(cls, G: EmbeddedGraph, vertices: Sequence[int]) -> "CycleWalk":
        vertices = tuple(vertices)
        check_cycle(G, vertices)
        n = len(vertices)
        return cls(vertices, tuple(G.dart_from(vertices[i], vertices[(i + 1) % n]) for i in range(n)))


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotation/reflection of a cyclic vertex sequence that is lexicographically least."""
    vs = list(vertices)
    i = vs.index(min(vs))
    fwd = vs[i:] + vs[:i]
    bwd = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, bwd))


def _adjacency(G) -> Mapping[int, Iterable[int]]:
    return G.adj if isinstance(G, EmbeddedGraph) else G


def shortest_path(G, u: int, w: int) -> list[int]:
    """Breadth-first shortest ``u``-``w`` path with lowest-id tie-breaking.

    Because the path is geodesic, no vertex has neighbors on it more than
    two steps apart, hence at most 3 neighbors on it; this is checked.
    """
    adj = _adjacency(G)
    path = graphs.set_path(adj, [u], [w])
    if path is None:
        raise PreconditionError(f"{u} and {w} lie in different components")
    on_path = set(path)
    for v in adj:
        if sum(1 for x in adj[v] if x in on_path) > 3:
            raise InvariantError(f"vertex {v} has more than 3 neighbors on a shortest path")
    return path


def _cycle_vertices(C) -> list[int]:
    return list(getattr(C, "vertices", C))


def classify_cycle(G: EmbeddedGraph, C) -> CycleClass:
    """Classify a cycle by surgery.

    1-sided cycles have negative sign product.  Otherwise cut along the
    cycle: one resulting component means non-separating; with two, the
    cycle is contractible exactly when one side caps off to a sphere.
    """
    vertices = _cycle_vertices(C)
    check_cycle(G, vertices)
    if not G.is_connected:
        comp = next(c for c in G.components() if vertices[0] in c.vertices)
        G = comp
    if cycle_sign(G, vertices) < 0:
        return CycleClass.ONE_SIDED
    pieces = cut_along_cycle(G, vertices).graph.components()
    if len(pieces) == 1:
        return CycleClass.TWO_SIDED_NONSEPARATING
    if len(pieces) != 2:
        raise InvariantError(f"cutting along a cycle gave {len(pieces)} components")
    if min(euler_genus(p) for p in pieces) == 0:
        return CycleClass.CONTRACTIBLE
    return CycleClass.TWO_SIDED_SEPARATING


def is_contractible(G: EmbeddedGraph, C) -> bool:
    return classify_cycle(G, C) is CycleClass.CONTRACTIBLE


def fundamental_cycles(G: EmbeddedGraph) -> set[tuple[int, ...]]:
    """Fundamental cycles of the BFS tree rooted at every vertex, canonicalised."""
    adj = G.adj
    found = set()
    for r in G.vertices:
        dist, parent = graphs.bfs_order(adj, [r])
        for a, b in graphs.edge_list(adj):
            if a not in dist or parent[a] == b or parent[b] == a:
                continue
            pa, pb = [a], [b]
            while pa[-1] != pb[-1]:
                if dist[pa[-1]] >= dist[pb[-1]]:
                    pa.append(parent[pa[-1]])
                else:
                    pb.append(parent[pb[-1]])
            cyc = pa + pb[-2::-1]
            if len(cyc) >= 3:
                found.add(canonical_cycle(cyc))
    return found


def shortest_noncontractible_cycle(G: EmbeddedGraph) -> CycleWalk | None:
    """A shortest non-contractible cycle, or ``None`` on the sphere.

    Candidates are the fundamental cycles of BFS trees from every root;
    the 3-path property guarantees a shortest non-contractible cycle is
    among them.  Candidates are tested by increasing length and then
    lexicographic vertex order, so the answer is deterministic.
    """
    if euler_genus(G) == 0:
        return None
    for cyc in sorted(fundamental_cycles(G), key=lambda c: (len(c), c)):
        if not is_contractible(G, cyc):
            return CycleWalk.from_vertices(G, cyc)
    raise InvariantError("positive genus but every fundamental cycle is contractible")
