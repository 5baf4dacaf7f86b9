"""Connected subgraphs whose contraction leaves a planar graph.

For a connected graph of Euler genus ``g > 0`` and a root ``v``,
:func:`planarizing_subgraph` finds a connected ``H`` containing ``v`` such
that ``G/H`` is planar and every vertex has at most ``9g - 4`` neighbors
in ``H``.  The recursion cuts along a shortest non-contractible cycle and
contracts the resulting faces.  :func:`planarizing_subgraph_2pt` is the
two-terminal variant (``H`` must contain both ``u`` and ``w``; bound
``max(3, 9g - 2)``, with ``H`` a shortest path when ``g = 0``).

Every recursion level re-checks its own postconditions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from . import graphs
from .embedding import EmbeddedGraph, contract_subgraph, cut_along_cycle, euler_genus
from .errors import InvariantError, PreconditionError
from .topology import shortest_noncontractible_cycle, shortest_path

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlanarizeResult:
    h_vertices: frozenset[int]
    quotient: dict[int, set[int]]
    quotient_vertex: int
    max_neighbors_in_h: int
    bound: int
    genus: int


def _verify(G: EmbeddedGraph, H: set[int], bound: int, roots) -> int:
    adj = G.adj
    if not set(roots) <= H:
        raise InvariantError(f"H misses required vertices {sorted(set(roots) - H)}")
    if not graphs.induces_connected(adj, H):
        raise InvariantError("H is not connected")
    quotient, _ = graphs.quotient(adj, H)
    if not graphs.is_planar(quotient):
        raise InvariantError("G/H is not planar")
    worst = max(graphs.neighbor_counts(adj, H).values())
    if worst > bound:
        raise InvariantError(f"a vertex has {worst} neighbors in H, bound is {bound}")
    return worst


def _fresh(G: EmbeddedGraph) -> int:
    return max(G.vertices) + 1


def _two_point(G: EmbeddedGraph, u: int, w: int) -> tuple[set[int], int]:
    g = euler_genus(G)
    bound = max(3, 9 * g - 2)
    path = shortest_path(G, u, w)
    H = set(path)
    if g > 0:
        star, vmap = contract_subgraph(G, path, _fresh(G))
        hub = vmap[path[0]]
        if euler_genus(star) > 0:
            H |= _one_point(star, hub) - {hub}
    _verify(G, H, bound, (u, w))
    return H, bound


def _one_point(G: EmbeddedGraph, v: int) -> set[int]:
    g = euler_genus(G)
    H, case_bound = _split(G, v, g)
    if case_bound > 9 * g - 4:
        raise InvariantError(f"case bound {case_bound} exceeds 9g-4 = {9 * g - 4}")
    _verify(G, H, case_bound, (v,))
    return H


def _split(G: EmbeddedGraph, v: int, g: int) -> tuple[set[int], int]:
    cycle = list(shortest_noncontractible_cycle(G).vertices)
    on_cycle = set(cycle)
    cut = cut_along_cycle(G, cycle)
    label = _fresh(cut.graph)
    pieces = cut.graph.components()

    def lift(Hs, hub, hub_set):
        out = {x for x in Hs if x != hub}
        if hub in Hs:
            out |= hub_set
        return out

    if cut.one_sided:
        log.debug("genus %d: 1-sided cycle of length %d", g, len(cycle))
        face = cut.faces[0]
        star, vmap = contract_subgraph(cut.graph, face, label)
        root = label if v in on_cycle else vmap[v]
        Hs, B = _two_point(star, root, label)
        return lift(Hs, label, on_cycle), B + 2

    if len(pieces) == 2:
        log.debug("genus %d: separating cycle of length %d", g, len(cycle))
        fa, fb = cut.faces
        first = next(p for p in pieces if (v in p.vertices if v not in on_cycle else fa[0] in p.vertices))
        second = next(p for p in pieces if p is not first)
        f1, f2 = (fa, fb) if fa[0] in first.vertices else (fb, fa)
        star1, vmap1 = contract_subgraph(first, f1, label)
        star2, _ = contract_subgraph(second, f2, label)
        root = label if v in on_cycle else vmap1[v]
        H1, B1 = _two_point(star1, root, label)
        g2 = euler_genus(star2)
        if g2 > 0:
            H2, B2 = _one_point(star2, label), 9 * g2 - 4
        else:
            H2, B2 = {label}, 0
        return lift(H1, label, on_cycle) | lift(H2, label, on_cycle), B1 + B2 + 2

    log.debug("genus %d: non-separating cycle of length %d", g, len(cycle))
    fa, fb = cut.faces
    bridge = graphs.set_path(cut.graph.adj, fa, fb)
    if bridge is None:
        raise InvariantError("the two sides of a non-separating cycle are disconnected")
    counts = graphs.neighbor_counts(cut.graph.adj, bridge)
    if max(counts.values()) > 3:
        raise InvariantError("shortest face-to-face path has a vertex with more than 3 neighbors on it")
    star, vmap = contract_subgraph(cut.graph, set(fa) | set(fb) | set(bridge), label)
    root = label if v in on_cycle else vmap[v]
    Hs, B = _two_point(star, root, label)
    hub_set = on_cycle | {cut.origin.get(x, x) for x in bridge}
    return lift(Hs, label, hub_set), B + 5


def _result(G: EmbeddedGraph, H: set[int], bound: int, genus: int) -> PlanarizeResult:
    adj = G.adj
    quotient, hub = graphs.quotient(adj, H)
    worst = max(graphs.neighbor_counts(adj, H).values())
    return PlanarizeResult(frozenset(H), quotient, hub, worst, bound, genus)


def planarizing_subgraph(G: EmbeddedGraph, v: int) -> PlanarizeResult:
    if not G.is_connected:
        raise PreconditionError("graph must be connected")
    if v not in G.vertices:
        raise PreconditionError(f"vertex {v} is not in the graph")
    g = euler_genus(G)
    if g == 0:
        raise PreconditionError("graph is already planar (Euler genus 0)")
    H = _one_point(G, v)
    return _result(G, H, 9 * g - 4, g)


def planarizing_subgraph_2pt(G: EmbeddedGraph, u: int, w: int) -> PlanarizeResult:
    if u not in G.vertices or w not in G.vertices:
        raise PreconditionError("both terminals must be vertices of the graph")
    if not G.is_connected:
        comp = next(c for c in G.components() if u in c.vertices)
        if w not in comp.vertices:
            raise PreconditionError(f"{u} and {w} lie in different components")
        G = comp
    H, bound = _two_point(G, u, w)
    return _result(G, H, bound, euler_genus(G))
