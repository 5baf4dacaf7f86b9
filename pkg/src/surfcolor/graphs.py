"""Plain (non-embedded) simple graphs as adjacency dictionaries.

An adjacency is a ``dict`` mapping each integer vertex to the ``set`` of its
neighbors.  Every function here treats its input as read-only.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping

import networkx as nx

from .errors import PreconditionError

Adjacency = dict[int, set[int]]


def from_edges(edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Adjacency:
    adj: Adjacency = {v: set() for v in vertices}
    for u, v in edges:
        if u == v:
            raise PreconditionError(f"loop at vertex {u}")
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def copy(adj: Mapping[int, Iterable[int]]) -> Adjacency:
    return {v: set(nb) for v, nb in adj.items()}


def edge_list(adj: Mapping[int, Iterable[int]]) -> list[tuple[int, int]]:
    """Sorted list of edges ``(u, v)`` with ``u < v``."""
    return sorted((u, v) for u, nb in adj.items() for v in nb if u < v)


def num_edges(adj: Mapping[int, Iterable[int]]) -> int:
    return sum(len(nb) for nb in adj.values()) // 2


def induced(adj: Mapping[int, Iterable[int]], keep: Iterable[int]) -> Adjacency:
    keep = set(keep)
    return {v: {u for u in adj[v] if u in keep} for v in keep}


def bfs_order(adj: Mapping[int, Iterable[int]], sources: Iterable[int]) -> tuple[dict[int, int], dict[int, int | None]]:
    """Breadth-first search from ``sources`` visiting neighbors in increasing id order.

    Returns ``(dist, parent)``; sources have parent ``None``.
    """
    dist: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    queue = deque()
    for s in sorted(set(sources)):
        dist[s] = 0
        parent[s] = None
        queue.append(s)
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    return dist, parent


def components(adj: Mapping[int, Iterable[int]]) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for v in sorted(adj):
        if v in seen:
            continue
        dist, _ = bfs_order(adj, [v])
        seen.update(dist)
        out.append(set(dist))
    return out


def is_connected(adj: Mapping[int, Iterable[int]]) -> bool:
    if not adj:
        return True
    dist, _ = bfs_order(adj, [min(adj)])
    return len(dist) == len(adj)


def induces_connected(adj: Mapping[int, Iterable[int]], vertices: Iterable[int]) -> bool:
    vertices = set(vertices)
    if not vertices:
        return False
    return is_connected(induced(adj, vertices))


def set_path(adj: Mapping[int, Iterable[int]], sources: Iterable[int], targets: Iterable[int]) -> list[int] | None:
    """Shortest path from the set ``sources`` to the set ``targets``.

    Ties are resolved towards smaller vertex ids, so the result is
    reproducible.  Returns ``None`` when no target is reachable.
    """
    targets = set(targets)
    dist, parent = bfs_order(adj, sources)
    reached = [t for t in targets if t in dist]
    if not reached:
        return None
    end = min(reached, key=lambda t: (dist[t], t))
    path = [end]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def neighbor_counts(adj: Mapping[int, Iterable[int]], subset: Iterable[int]) -> dict[int, int]:
    """Number of neighbors each vertex has inside ``subset``."""
    subset = set(subset)
    return {v: sum(1 for u in adj[v] if u in subset) for v in adj}


def quotient(adj: Mapping[int, Iterable[int]], part: Iterable[int], label: int | None = None) -> tuple[Adjacency, int]:
    """Contract the vertex set ``part`` to one vertex, dropping loops and parallel edges.

    Returns the simple quotient and the id of the contracted vertex
    (``label``, or a fresh id one above the current maximum).
    """
    part = set(part)
    if not part:
        raise PreconditionError("cannot contract an empty vertex set")
    if label is None:
        label = max(adj) + 1
    elif label in adj and label not in part:
        raise PreconditionError(f"label {label} already names a vertex outside the contracted set")
    out: Adjacency = {label: set()}
    for v, nb in adj.items():
        if v in part:
            continue
        row = out.setdefault(v, set())
        for u in nb:
            row.add(label if u in part else u)
    for v in list(out):
        if v != label and label in out[v]:
            out[label].add(v)
    return out, label


def girth(adj: Mapping[int, Iterable[int]]) -> float:
    """Length of a shortest cycle, or ``math.inf`` for forests.

    One BFS per vertex; a non-tree edge ``xy`` met from root ``r`` closes a
    closed walk of length ``d(x) + d(y) + 1`` and the minimum over all roots
    is the girth.
    """
    best = float("inf")
    for r in adj:
        dist = {r: 0}
        parent = {r: None}
        queue = deque([r])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_planar(adj: Mapping[int, Iterable[int]]) -> bool:
    """Planarity of a simple graph (left-right test from networkx)."""
    g = nx.Graph()
    g.add_nodes_from(adj)
    g.add_edges_from(edge_list(adj))
    planar, _ = nx.check_planarity(g)
    return planar


def complete_graph(n: int, offset: int = 0) -> Adjacency:
    vs = range(offset, offset + n)
    return {v: {u for u in vs if u != v} for v in vs}


def cycle_graph(n: int, offset: int = 0) -> Adjacency:
    return from_edges(((offset + i, offset + (i + 1) % n) for i in range(n)), range(offset, offset + n))
