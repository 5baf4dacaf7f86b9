"""Local recoloring procedures for defect vectors of the form ``(K, ..., K, smaller...)``.

Both work on any graph. Their contracts only promise what the underlying
arguments guarantee. :func:`extend_to_vertex` always succeeds when ``v``
has degree at most ``K + k - 1`` and fewer than ``j`` neighbors of degree
at least ``K + k``. :func:`color_via_high_partition` always returns a
coloring valid for ``(d_1 + 1, d_2, ..., d_k)``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from ..errors import PreconditionError
from .defects import Coloring, DefectsLike, DefectVector, as_adjacency, as_defects, verify_coloring


def _top(dv: DefectVector) -> tuple[int, int]:
    top = dv.top
    if top is None:
        raise PreconditionError(f"defects {dv} do not start with j < k equal maximal entries")
    return top


def _same(adj, coloring, x: int, c: int) -> int:
    return sum(1 for y in adj[x] if coloring.get(y) == c)


def _fits(adj, dv: DefectVector, coloring, x: int, c: int) -> bool:
    """Can ``x`` take color ``c`` without breaking itself or a neighbor?"""
    if _same(adj, coloring, x, c) > dv.bound(c):
        return False
    return all(_same(adj, coloring, y, c) < dv.bound(c) for y in adj[x] if coloring.get(y) == c and y != x)


def _recolor(adj, dv, coloring, x: int, colors) -> bool:
    old = coloring.pop(x)
    for c in colors:
        if c != old and _fits(adj, dv, coloring, x, c):
            coloring[x] = c
            return True
    coloring[x] = old
    return False


def extend_to_vertex(graph, defects: DefectsLike, partial: Mapping[int, int], v: int) -> Coloring | None:
    """Extend a coloring of ``G - v`` to ``v``, recoloring neighbors of ``v`` if needed.

    First every neighbor that can move to one of the small colors
    ``j+1..k`` does so.  If some color is then missing around ``v``, ``v``
    takes it.  Otherwise pick the first color ``l <= j`` carried by no
    neighbor of degree ``>= K + k``, move each ``l``-saturated neighbor
    to another color, and give ``v`` color ``l``.  Returns ``None`` when
    a step gets stuck.
    """
    adj = as_adjacency(graph)
    dv = as_defects(defects)
    j, K = _top(dv)
    k = dv.k
    if v not in adj:
        raise PreconditionError(f"vertex {v} is not in the graph")
    if v in partial:
        raise PreconditionError(f"vertex {v} is already colored")
    rest = {x: {y for y in adj[x] if y != v} for x in adj if x != v}
    bad = verify_coloring(rest, dv, partial)
    if bad:
        raise PreconditionError(f"partial coloring is invalid on G - v at vertex {bad[0].vertex}")
    coloring = dict(partial)
    small = range(j + 1, k + 1)
    for u in sorted(adj[v]):
        if coloring[u] <= j:
            _recolor(adj, dv, coloring, u, small)

    present = {coloring[u] for u in adj[v]}
    missing = [c for c in range(1, k + 1) if c not in present]
    if missing:
        coloring[v] = missing[0]
        return coloring

    high = K + k
    high_colors = {coloring[u] for u in adj[v] if len(adj[u]) >= high}
    free = [l for l in range(1, j + 1) if l not in high_colors]
    if not free:
        return None
    l = free[0]
    for u in sorted(adj[v]):
        if coloring[u] == l and _same(adj, coloring, u, l) == dv.bound(l):
            around = {coloring.get(y) for y in adj[u]}
            order = [c for c in range(1, k + 1) if c not in around] + list(range(1, k + 1))
            if not _recolor(adj, dv, coloring, u, order):
                return None
    coloring[v] = l
    if verify_coloring(adj, dv, coloring):
        return None
    return coloring


@dataclass(frozen=True)
class HighPartitionResult:
    coloring: Coloring
    high: frozenset[int]
    parts: tuple[frozenset[int], ...]
    relaxed_valid: bool
    strict_valid: bool


def color_via_high_partition(graph, defects: DefectsLike) -> HighPartitionResult:
    """Color the few high-degree vertices with colors ``2..k``, then color the rest greedily.

    High vertices have degree ``>= K + k``.  They are split, in id order,
    into groups ``S_2, ..., S_k`` with ``|S_i| <= d_i + 1``; ``S_i`` gets
    color ``i``.  Each remaining vertex, in id order, takes the first
    color ``i >= 2`` missing from its colored neighbors, or color 1.
    """
    adj = as_adjacency(graph)
    dv = as_defects(defects)
    _, K = _top(dv)
    k = dv.k
    high = sorted(x for x in adj if len(adj[x]) >= K + k)
    room = sum(d + 1 for d in dv.defects[1:])
    if len(high) > room:
        raise PreconditionError(f"|H| = {len(high)} high vertices exceed the room {room} in colors 2..{k}")
    coloring: Coloring = {}
    parts = []
    it = iter(high)
    for i in range(2, k + 1):
        part = []
        for _ in range(dv.bound(i) + 1):
            x = next(it, None)
            if x is None:
                break
            part.append(x)
            coloring[x] = i
        parts.append(frozenset(part))
    for x in sorted(adj):
        if x in coloring:
            continue
        around = {coloring[y] for y in adj[x] if y in coloring}
        coloring[x] = next((i for i in range(2, k + 1) if i not in around), 1)
    return HighPartitionResult(
        coloring,
        frozenset(high),
        tuple(parts),
        relaxed_valid=not verify_coloring(adj, dv.relaxed_first(), coloring),
        strict_valid=not verify_coloring(adj, dv, coloring),
    )
