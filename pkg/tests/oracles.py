"""Independent reference implementations used only by the tests.

These deliberately avoid the code paths they check: cycles are enumerated
by plain DFS, contractibility is decided from the face structure rather
than by cutting, and colorings are enumerated exhaustively.
"""

from __future__ import annotations

import itertools

from surfcolor.embedding import EmbeddedGraph, trace_faces


def all_cycles(adj, max_len=None):
    """Every simple cycle (length >= 3) once, as a tuple starting at its least vertex."""
    out = []
    for s in sorted(adj):
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for u in adj[v]:
                if u == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(path)
                elif u > s and u not in path and (max_len is None or len(path) < max_len):
                    stack.append((u, path + (u,)))
    return out


def contractible_by_faces(G: EmbeddedGraph, cycle) -> bool:
    """Contractibility from the face decomposition.

    A 2-sided cycle is contractible iff the faces glued across non-cycle
    edges fall into two regions and one of them is an open disc, i.e. has
    compactly supported Euler characteristic V - E + F = 1.
    """
    n = len(cycle)
    cyc_edges = {G.edge_between(cycle[i], cycle[(i + 1) % n]) for i in range(n)}
    sign = 1
    for e in cyc_edges:
        sign *= G.sign(e)
    if sign < 0:
        return False
    faces = trace_faces(G)
    parent = list(range(len(faces)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    occurrences = {}
    for fi, f in enumerate(faces):
        for d in f.darts:
            occurrences.setdefault(d >> 1, []).append(fi)
    for e, fs in occurrences.items():
        if e not in cyc_edges:
            parent[find(fs[0])] = find(fs[1])
    regions = {}
    for fi in range(len(faces)):
        regions.setdefault(find(fi), set()).add(fi)
    if len(regions) == 1:
        return False
    on_cycle = set(cycle)
    for fs in regions.values():
        edges = {e for e, occ in occurrences.items() if e not in cyc_edges and occ[0] in fs}
        verts = {v for fi in fs for v in faces[fi].vertices if v not in on_cycle}
        if len(verts) - len(edges) + len(fs) == 1:
            return True
    return False


def all_colorings_valid(adj, defects):
    """Yes/no by full enumeration of k^n assignments."""
    vs = sorted(adj)
    k = len(defects)
    for combo in itertools.product(range(1, k + 1), repeat=len(vs)):
        col = dict(zip(vs, combo))
        if all(sum(1 for u in adj[v] if col[u] == col[v]) <= defects[col[v] - 1] for v in vs):
            return True
    return False


def planar_by_rotations(adj, limit=300_000):
    """Planarity by trying every orientable rotation system of each component.

    Returns ``None`` if the search space exceeds ``limit``.
    """
    import math

    from surfcolor import graphs
    from surfcolor.embedding import EmbeddedGraph, euler_genus

    for comp in graphs.components(adj):
        sub = graphs.induced(adj, comp)
        space = 1
        for v in sub:
            space *= math.factorial(max(len(sub[v]) - 1, 0))
        if space > limit:
            return None
        choices = []
        for v in sorted(sub):
            nb = sorted(sub[v])
            if len(nb) <= 2:
                choices.append([nb])
            else:
                choices.append([[nb[0], *p] for p in itertools.permutations(nb[1:])])
        verts = sorted(sub)
        ok = False
        for rots in itertools.product(*choices):
            G = EmbeddedGraph.from_neighbor_rotation(dict(zip(verts, rots)))
            if euler_genus(G) == 0:
                ok = True
                break
        if not ok:
            return False
    return True


def face_count_by_flags(G: EmbeddedGraph) -> int:
    """Faces as orbits of two flag involutions, independent of face tracing.

    A flag is a dart with a side.  ``turn`` swaps a dart's +side with the
    next dart's -side in the rotation; ``cross`` moves to the other end of
    the edge, swapping sides unless the edge is twisted.  Each face is an
    orbit of the group they generate.
    """
    turn = {}
    for v in G.vertices:
        rot = G.rotation(v)
        for i, d in enumerate(rot):
            nxt = rot[(i + 1) % len(rot)]
            turn[(d, 1)] = (nxt, -1)
            turn[(nxt, -1)] = (d, 1)
    seen = set()
    faces = 0
    for start in turn:
        if start in seen:
            continue
        faces += 1
        stack = [start]
        seen.add(start)
        while stack:
            d, s = stack.pop()
            crossed = (d ^ 1, -s * G.sign(d >> 1))
            for nb in (turn[(d, s)], crossed):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
    return faces + sum(1 for v in G.vertices if G.degree(v) == 0)


def shortest_noncontractible_length(G: EmbeddedGraph):
    """Length of a shortest non-contractible cycle by enumerating every cycle, or ``None``."""
    best = None
    for cyc in all_cycles(G.adj):
        if (best is None or len(cyc) < best) and not contractible_by_faces(G, cyc):
            best = len(cyc)
    return best


def girth_networkx(adj) -> float:
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(adj)
    g.add_edges_from((u, v) for u in adj for v in adj[u])
    return nx.girth(g)
