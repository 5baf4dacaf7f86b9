"""Graph families that are hard to color with few colors of small defect.

Every generator returns a :class:`GeneratedGraph`: a plain adjacency dict
plus a ``meta`` dict holding the closed-form vertex and edge counts, the
girth claim (if any), the coloring the family is claimed to avoid, and
the cheap Euler genus bound ``m - n + 2``.  Generators check their output
against the closed forms before returning.

Families (``k`` is the defect parameter throughout):

* ``sprout(H, k)``: ``H`` plus, for every vertex, ``k`` private copies of ``H`` joined to it
* ``g1(k) = sprout(K4, k + 1)``: no ``(0,0,0,k)``-coloring
* ``g2(k) = sprout(K7, k + 1)``: no ``(2,2,k)``-coloring
* ``gk_2kk(k)``: no ``(2,k,k)``- and no ``(0,0,k,k)``-coloring
* ``not_1kk(k)``: planar, no ``(1,k,k)``-coloring
* ``descartes_girth6(k)``: girth 6, no ``(0,0,k)``-coloring (full size about ``2 * 7**9 * k`` edges)
* ``two_star_girth7(K)``: girth 7, no ``(0,K)``-coloring
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace

from . import graphs
from .errors import InvariantError, PreconditionError
from .graphs import Adjacency

UNVERIFIED = "claimed, unverified at desk scale"
FULL_EDGE_LIMIT = 2_000_000


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Adjacency
    meta: dict = field(default_factory=dict)

    @property
    def num_vertices(self) -> int:
        return len(self.graph)

    @property
    def num_edges(self) -> int:
        return graphs.num_edges(self.graph)


class _Builder:
    def __init__(self):
        self.adj: Adjacency = {}

    def vertex(self) -> int:
        v = len(self.adj)
        self.adj[v] = set()
        return v

    def edge(self, a: int, b: int) -> None:
        if a == b or b in self.adj[a]:
            raise InvariantError(f"generator produced a loop or repeated edge {a}-{b}")
        self.adj[a].add(b)
        self.adj[b].add(a)

    def copy_of(self, H: Adjacency) -> list[int]:
        order = sorted(H)
        ids = {v: self.vertex() for v in order}
        for a, b in graphs.edge_list(H):
            self.edge(ids[a], ids[b])
        return [ids[v] for v in order]

    def clique(self, n: int) -> list[int]:
        return self.copy_of(graphs.complete_graph(n))


def _finish(adj: Adjacency, meta: dict, girth_check: bool = True) -> GeneratedGraph:
    n, m = len(adj), graphs.num_edges(adj)
    if (n, m) != (meta["vertices"], meta["edges"]):
        raise InvariantError(
            f"{meta['family']}: built {n} vertices / {m} edges, closed form says {meta['vertices']} / {meta['edges']}"
        )
    meta.setdefault("euler_genus_upper", m - n + 2)
    meta.setdefault("claim_status", UNVERIFIED if meta.get("not_colorable") else None)
    if girth_check and meta.get("girth_at_least"):
        actual = graphs.girth(adj)
        if actual < meta["girth_at_least"]:
            raise InvariantError(f"{meta['family']}: girth {actual} below claimed {meta['girth_at_least']}")
        meta["girth"] = actual
    return GeneratedGraph(adj, meta)


def _check_k(k: int, low: int = 0) -> None:
    if not isinstance(k, int) or k < low:
        raise PreconditionError(f"parameter must be an integer >= {low}, got {k!r}")


# -- closed forms ------------------------------------------------------------


def sprout_counts(n: int, m: int, k: int) -> tuple[int, int]:
    return n + k * n * n, m + k * n * (n + m)


def gk_counts(k: int) -> tuple[int, int]:
    return 128 * k * k + 196 * k + 72, 448 * k * k + 694 * k + 252


def hv_counts(k: int) -> tuple[int, int]:
    spokes = 3 * k + 1
    return spokes + 1 + spokes * 3 * (2 * k + 1), 2 * spokes + spokes * 8 * (2 * k + 1)


def not_1kk_counts(k: int) -> tuple[int, int]:
    n, m = hv_counts(k)
    return 3 * n, 3 * m + 3


def descartes_counts(k: int, tuples: int = 7**7) -> tuple[int, int]:
    copies = tuples * (7 * k + 1)
    return 49 + 7 * copies, 49 + 14 * copies


def two_star_counts(K: int) -> tuple[int, int]:
    L = 3 * K + 2
    return 2 * (1 + L + L * L), 27 * K * K + 39 * K + 15


def family_counts(family: str, k: int) -> tuple[int, int]:
    """Closed-form ``(vertices, edges)`` without building anything."""
    _check_k(k, 1 if family in ("hv", "not1kk") else 0)
    if family == "g1":
        return sprout_counts(4, 6, k + 1)
    if family == "g2":
        return sprout_counts(7, 21, k + 1)
    if family == "gk":
        return gk_counts(k)
    if family == "hv":
        return hv_counts(k)
    if family == "not1kk":
        return not_1kk_counts(k)
    if family == "descartes6":
        return descartes_counts(k)
    if family == "twostar7":
        return two_star_counts(k)
    raise PreconditionError(f"unknown family {family!r}")


# -- generators ----------------------------------------------------------------


def sprout(H: Adjacency, k: int, family: str = "sprout", **extra) -> GeneratedGraph:
    """``H`` (relabeled ``0..n-1`` in id order) with ``k`` disjoint copies of ``H`` joined to each vertex."""
    _check_k(k)
    b = _Builder()
    basic = b.copy_of(H)
    for v in basic:
        for _ in range(k):
            for x in b.copy_of(H):
                b.edge(v, x)
    n, m = len(H), graphs.num_edges(H)
    nv, ne = sprout_counts(n, m, k)
    meta = {"family": family, "k": k if family == "sprout" else k - 1, "vertices": nv, "edges": ne, "basic": basic}
    return _finish(b.adj, {**meta, **extra})


def g1_0009(k: int) -> GeneratedGraph:
    """``S(K4, k + 1)``: every ``(0,0,0,k)``-coloring attempt fails."""
    _check_k(k)
    return sprout(graphs.complete_graph(4), k + 1, family="g1", copies=k + 1, not_colorable=f"0,0,0,{k}")


def g2_22k(k: int) -> GeneratedGraph:
    """``S(K7, k + 1)``: no ``(2,2,k)``-coloring."""
    _check_k(k)
    return sprout(graphs.complete_graph(7), k + 1, family="g2", copies=k + 1, not_colorable=f"2,2,{k}")


def gk_2kk(k: int, clique: int = 4) -> GeneratedGraph:
    """Basic ``K4`` joined to ``k + 1`` further ``K4`` copies; every join edge gets ``2k + 1`` ``K4`` copies joined to both ends.

    ``clique=3`` builds the triangle variant, which keeps the ``(0,0,k,k)``
    claim; the closed-form counts are only for ``clique=4``.
    """
    _check_k(k)
    b = _Builder()
    basic = b.clique(4)
    support = []
    for _ in range(k + 1):
        other = b.clique(clique)
        for u in basic:
            for x in other:
                b.edge(u, x)
                support.append((u, x))
    for u, x in support:
        for _ in range(2 * k + 1):
            for y in b.clique(clique):
                b.edge(u, y)
                b.edge(x, y)
    if clique == 4:
        nv, ne = gk_counts(k)
    else:
        nv = 4 + clique * (k + 1) + len(support) * clique * (2 * k + 1)
        ne = graphs.num_edges(b.adj)
    meta = {
        "family": "gk",
        "k": k,
        "vertices": nv,
        "edges": ne,
        "not_colorable": f"2,{k},{k}",
        "also_not_colorable": f"0,0,{k},{k}",
        "support_edges": len(support),
    }
    return _finish(b.adj, meta)


def thicken_edge(G: Adjacency, x: int, y: int, k: int) -> GeneratedGraph:
    """Add ``2k + 1`` paths on 3 vertices, each new vertex joined to both ``x`` and ``y``.

    In a ``(1,k,k)``-coloring, ``x`` and ``y`` can then not carry the two
    ``k`` colors.  New vertices get fresh ids above ``max(G)``.
    """
    _check_k(k)
    if x not in G or y not in G[x]:
        raise PreconditionError(f"{x}-{y} is not an edge")
    adj = graphs.copy(G)
    nxt = max(adj) + 1
    for _ in range(2 * k + 1):
        path = [nxt, nxt + 1, nxt + 2]
        nxt += 3
        for p in path:
            adj[p] = {x, y}
            adj[x].add(p)
            adj[y].add(p)
        adj[path[0]].add(path[1])
        adj[path[1]] |= {path[0], path[2]}
        adj[path[2]].add(path[1])
    meta = {
        "family": "thicken",
        "k": k,
        "edge": (x, y),
        "vertices": len(G) + 3 * (2 * k + 1),
        "edges": graphs.num_edges(G) + 8 * (2 * k + 1),
        "forbids": f"{{c({x}), c({y})}} = the two defect-{k} colors under 1,{k},{k}",
    }
    return _finish(adj, meta)


def hv_gadget(k: int) -> GeneratedGraph:
    """Apex ``0`` over the cycle ``1..3k+1`` with every spoke thickened; the apex must get color 1."""
    _check_k(k, 1)
    L = 3 * k + 1
    adj: Adjacency = {0: set(range(1, L + 1))}
    for i in range(1, L + 1):
        adj[i] = {0, i % L + 1, (i - 2) % L + 1}
    for i in range(1, L + 1):
        adj = thicken_edge(adj, 0, i, k).graph
    nv, ne = hv_counts(k)
    meta = {
        "family": "hv",
        "k": k,
        "vertices": nv,
        "edges": ne,
        "root": 0,
        "forces": f"root color 1 in every (1,{k},{k})-coloring",
    }
    return _finish(adj, meta)


def not_1kk(k: int) -> GeneratedGraph:
    """Triangle whose three corners are the roots of three copies of :func:`hv_gadget`."""
    _check_k(k, 1)
    gadget = hv_gadget(k).graph
    b = _Builder()
    roots = []
    for _ in range(3):
        ids = b.copy_of(gadget)
        roots.append(ids[0])
    for a, c in itertools.combinations(roots, 2):
        b.edge(a, c)
    nv, ne = not_1kk_counts(k)
    meta = {"family": "not1kk", "k": k, "vertices": nv, "edges": ne, "roots": roots, "not_colorable": f"1,{k},{k}"}
    return _finish(b.adj, meta)


def descartes_tuples(count: int | None = None, start: int = 0):
    """Seven-vertex sets in lexicographic order of positions; vertex ``j`` of ``D_i`` has id ``7i + j``."""
    stop = 7**7 if count is None else min(7**7, start + count)
    for index in range(start, stop):
        digits = []
        x = index
        for _ in range(7):
            digits.append(x % 7)
            x //= 7
        yield tuple(7 * i + d for i, d in enumerate(reversed(digits)))


def _far_apart(adj: Adjacency, S) -> bool:
    """No two vertices of ``S`` within distance 2."""
    targets = set(S)
    for s in S:
        near = set(adj[s])
        for x in adj[s]:
            near |= adj[x]
        if (near - {s}) & targets:
            return False
    return True


def descartes_girth6(
    k: int,
    sample: int | None = None,
    seed: int = 0,
    count_only: bool = False,
    allow_full: bool = False,
) -> GeneratedGraph:
    """Seven ``C7`` copies ``D_1..D_7``; each choice of one vertex per ``D_i`` gets ``7k + 1`` new ``C7`` copies matched to it.

    ``count_only`` returns closed-form counts with an empty graph.
    ``sample=s`` builds only ``s`` consecutive seven-vertex sets, starting
    at a position drawn from ``random.Random(seed)``.  Building every set
    needs ``allow_full=True`` once the edge count passes ``FULL_EDGE_LIMIT``.
    """
    _check_k(k)
    nv, ne = descartes_counts(k)
    meta = {"family": "descartes6", "k": k, "vertices": nv, "edges": ne, "girth_at_least": 6}
    if count_only:
        meta.update(materialized=False, euler_genus_upper=ne - nv + 2, not_colorable=f"0,0,{k}")
        meta.setdefault("claim_status", UNVERIFIED)
        return GeneratedGraph({}, meta)
    if sample is None:
        if ne > FULL_EDGE_LIMIT and not allow_full:
            raise PreconditionError(f"full construction has {ne} edges; pass allow_full or use a sample")
        start, count = 0, 7**7
        meta["not_colorable"] = f"0,0,{k}"
    else:
        if sample < 1:
            raise PreconditionError("sample size must be positive")
        count = min(sample, 7**7)
        start = random.Random(seed).randrange(7**7 - count + 1)
        meta.update(sample=count, start=start, seed=seed, full_vertices=nv, full_edges=ne)
        meta["vertices"], meta["edges"] = descartes_counts(k, count)
    b = _Builder()
    for _ in range(7):
        ring = [b.vertex() for _ in range(7)]
        for j in range(7):
            b.edge(ring[j], ring[(j + 1) % 7])
    for S in descartes_tuples(count, start):
        for _ in range(7 * k + 1):
            if not _far_apart(b.adj, S):
                raise InvariantError(f"seven-vertex set {S} is not pairwise at distance >= 3")
            ring = [b.vertex() for _ in range(7)]
            for j in range(7):
                b.edge(ring[j], ring[(j + 1) % 7])
                b.edge(ring[j], S[j])
    meta["materialized"] = True
    return _finish(b.adj, meta)


def two_star_girth7(K: int) -> GeneratedGraph:
    """Two copies of a subdivided star with ``3K + 2`` leaves, leaves pairwise linked by 3-edge paths, centers joined."""
    _check_k(K)
    b = _Builder()
    centers = []
    for _ in range(2):
        c = b.vertex()
        centers.append(c)
        leaves = []
        for _ in range(3 * K + 2):
            mid, leaf = b.vertex(), b.vertex()
            b.edge(c, mid)
            b.edge(mid, leaf)
            leaves.append(leaf)
        for u, v in itertools.combinations(leaves, 2):
            x, y = b.vertex(), b.vertex()
            b.edge(u, x)
            b.edge(x, y)
            b.edge(y, v)
    b.edge(*centers)
    nv, ne = two_star_counts(K)
    meta = {
        "family": "twostar7",
        "k": K,
        "vertices": nv,
        "edges": ne,
        "girth_at_least": 7,
        "centers": centers,
        "not_colorable": f"0,{K}",
    }
    return _finish(b.adj, meta)


GENERATORS = {
    "g1": g1_0009,
    "g2": g2_22k,
    "gk": gk_2kk,
    "hv": hv_gadget,
    "not1kk": not_1kk,
    "descartes6": descartes_girth6,
    "twostar7": two_star_girth7,
}


def generate(family: str, k: int, **options) -> GeneratedGraph:
    if family not in GENERATORS:
        raise PreconditionError(f"unknown family {family!r}; choose from {', '.join(sorted(GENERATORS))}")
    return GENERATORS[family](k, **options)


def check_claim(gen: GeneratedGraph, timeout: float = 10.0) -> GeneratedGraph:
    """Run the exact solver on the family's non-colorability claim within ``timeout`` seconds.

    ``claim_status`` becomes ``verified``, ``refuted``, or stays unverified
    when the search does not finish.
    """
    from .coloring import SearchTimeout, solve_exact

    target = gen.meta.get("not_colorable")
    if not target or not gen.meta.get("materialized", True) or "sample" in gen.meta:
        return gen
    try:
        found = solve_exact(gen.graph, target, timeout=timeout)
    except SearchTimeout:
        return gen
    return replace(gen, meta={**gen.meta, "claim_status": "refuted" if found else "verified"})
