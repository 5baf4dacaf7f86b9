"""Exact backtracking search for defective colorings."""

from __future__ import annotations

import logging
import sys
import time
from collections.abc import Iterable, Mapping
from concurrent.futures import ProcessPoolExecutor

from ..errors import PreconditionError
from .defects import Coloring, DefectsLike, as_adjacency, as_defects

log = logging.getLogger(__name__)

_INF = float("inf")


class SearchTimeout(Exception):
    """The solver ran past its deadline without an answer."""


def _pin_domains(adj, k: int, pinned) -> dict[int, frozenset[int]]:
    domains = {}
    for v, spec in (pinned or {}).items():
        if v not in adj:
            raise PreconditionError(f"pinned vertex {v} is not in the graph")
        colors = frozenset([spec]) if isinstance(spec, int) else frozenset(spec)
        bad = [c for c in colors if not 1 <= c <= k]
        if bad:
            raise PreconditionError(f"pin {v}: color {bad[0]} outside 1..{k}")
        domains[v] = colors
    return domains


def pin_conflict(graph, defects: DefectsLike, pinned=None, caps: Mapping[int, int] | None = None) -> str | None:
    """Reason why the pins alone already rule out every coloring, else ``None``."""
    adj = as_adjacency(graph)
    dv = as_defects(defects)
    domains = _pin_domains(adj, dv.k, pinned)
    caps = caps or {}
    for v, dom in domains.items():
        if not dom:
            return f"vertex {v} is pinned to an empty color set"
    fixed = {v: next(iter(dom)) for v, dom in domains.items() if len(dom) == 1}
    for v, c in fixed.items():
        same = sum(1 for u in adj[v] if fixed.get(u) == c)
        allowed = min(dv.bound(c), caps.get(v, _INF))
        if same > allowed:
            return f"vertex {v} pinned to color {c} already has {same} pinned neighbors of that color (allowed {allowed})"
    return None


class _Search:
    def __init__(self, adj, dv, domains, caps, deadline):
        order = sorted(adj, key=lambda v: (-len(adj[v]), v))
        idx = {v: i for i, v in enumerate(order)}
        k = dv.k
        self.order = order
        self.n = len(order)
        self.k = k
        self.nbrs = [[idx[u] for u in sorted(adj[v])] for v in order]
        self.cap = [[min(dv.defects[c], caps.get(v, _INF)) for c in range(k)] for v in order]
        full = (1 << k) - 1
        self.allowed = [full] * self.n
        for v, dom in domains.items():
            mask = 0
            for c in dom:
                mask |= 1 << (c - 1)
            self.allowed[idx[v]] = mask
        # colors are interchangeable when they share a defect and every pin treats them alike
        self.symclass = [
            (dv.defects[c],) + tuple(c + 1 in dom for _, dom in sorted(domains.items())) for c in range(k)
        ]
        self.color = [-1] * self.n
        self.same = [0] * self.n
        self.nc = [[0] * k for _ in range(self.n)]
        self.block = [[0] * k for _ in range(self.n)]
        self.used = [0] * k
        self.trail: list[tuple] = []
        self.deadline = deadline
        self.nodes = 0

    def ok(self, u: int, c: int) -> bool:
        return bool(self.allowed[u] >> c & 1) and self.nc[u][c] <= self.cap[u][c] and not self.block[u][c]

    def domain_size(self, u: int) -> int:
        return sum(1 for c in range(self.k) if self.ok(u, c))

    def _saturate(self, w: int, c: int, touched: list[int]) -> None:
        for x in self.nbrs[w]:
            self.block[x][c] += 1
            self.trail.append(("block", x, c))
            touched.append(x)

    def assign(self, v: int, c: int) -> bool:
        color, same, cap, trail = self.color, self.same, self.cap, self.trail
        color[v] = c
        self.used[c] += 1
        trail.append(("color", v, c))
        touched = list(self.nbrs[v])
        for w in self.nbrs[v]:
            self.nc[w][c] += 1
            trail.append(("nc", w, c))
            if color[w] == c:
                same[w] += 1
                same[v] += 1
                trail.append(("same", w))
                trail.append(("same", v))
                if same[w] > cap[w][c]:
                    return False
                if same[w] == cap[w][c]:
                    self._saturate(w, c, touched)
        if same[v] > cap[v][c]:
            return False
        if same[v] == cap[v][c]:
            self._saturate(v, c, touched)
        for x in touched:
            if color[x] == -1 and not any(self.ok(x, cc) for cc in range(self.k)):
                return False
        return True

    def undo(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            op = trail.pop()
            kind = op[0]
            if kind == "nc":
                self.nc[op[1]][op[2]] -= 1
            elif kind == "block":
                self.block[op[1]][op[2]] -= 1
            elif kind == "same":
                self.same[op[1]] -= 1
            else:
                self.color[op[1]] = -1
                self.used[op[2]] -= 1

    def pick(self) -> int | None:
        best, best_size = None, _INF
        for i in range(self.n):
            if self.color[i] == -1:
                size = self.domain_size(i)
                if size < best_size:
                    best, best_size = i, size
                    if size <= 1:
                        break
        return best

    def candidates(self, v: int) -> list[int]:
        out, seen_classes = [], set()
        for c in range(self.k):
            if not self.ok(v, c):
                continue
            cls = self.symclass[c]
            if self.used[c] == 0:
                if cls in seen_classes:
                    continue
                seen_classes.add(cls)
            out.append(c)
        return out

    def run(self) -> bool:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout
        v = self.pick()
        if v is None:
            return True
        for c in self.candidates(v):
            mark = len(self.trail)
            if self.assign(v, c) and self.run():
                return True
            self.undo(mark)
        return False

    def start_prefix(self, domains) -> bool:
        idx = {v: i for i, v in enumerate(self.order)}
        for v in sorted(domains):
            if len(domains[v]) == 1:
                i, c = idx[v], next(iter(domains[v])) - 1
                if self.color[i] == -1 and not (self.ok(i, c) and self.assign(i, c)):
                    return False
        return not any(self.domain_size(i) == 0 for i in range(self.n) if self.color[i] == -1)

    def start(self, domains) -> bool:
        return self.start_prefix(domains) and self.run()

    def coloring(self) -> Coloring:
        return {v: self.color[i] + 1 for i, v in enumerate(self.order)}


def solve_exact(
    graph,
    defects: DefectsLike,
    pinned: Mapping[int, int | Iterable[int]] | None = None,
    caps: Mapping[int, int] | None = None,
    *,
    jobs: int = 1,
    deterministic: bool = True,
    timeout: float | None = None,
) -> Coloring | None:
    """Find a coloring respecting ``defects`` that extends the pins, or prove none exists.

    ``pinned`` maps a vertex to a color or a set of allowed colors.
    ``caps`` bounds, per vertex, the number of same-colored neighbors
    whatever its color (``{v: 0}`` asks ``v`` to have no neighbor of its
    own color).  The search visits vertices with fewest remaining colors
    first, ties broken by descending degree then id, and only tries the
    first unused color among colors with equal defect that no pin or cap
    distinguishes.  With ``jobs > 1`` and ``deterministic=False`` the top
    branches run in separate processes; satisfiability is unchanged but
    the witness may differ.  ``timeout`` (seconds) raises
    :class:`SearchTimeout`.
    """
    adj = as_adjacency(graph)
    dv = as_defects(defects)
    caps = dict(caps or {})
    domains = _pin_domains(adj, dv.k, pinned)
    reason = pin_conflict(adj, dv, pinned, caps)
    if reason is not None:
        log.info("no coloring: %s", reason)
        return None
    if not adj:
        return {}
    deadline = None if timeout is None else time.monotonic() + timeout
    if jobs > 1 and not deterministic:
        return _solve_parallel(adj, dv, domains, caps, jobs, timeout)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(adj) + 100))
    try:
        search = _Search(adj, dv, domains, caps, deadline)
        found = search.start(domains)
    finally:
        sys.setrecursionlimit(limit)
    log.debug("search visited %d nodes", search.nodes)
    return search.coloring() if found else None


def _branch(args):
    adj, defects, domains, caps, timeout = args
    return solve_exact(adj, defects, domains, caps, timeout=timeout)


def _solve_parallel(adj, dv, domains, caps, jobs, timeout):
    search = _Search(adj, dv, domains, caps, None)
    if not search.start_prefix(domains):
        return None
    v = search.pick()
    if v is None:
        return search.coloring()
    vertex = search.order[v]
    branches = []
    for c in search.candidates(v):
        dom = dict(domains)
        dom[vertex] = frozenset([c + 1])
        branches.append(({x: set(n) for x, n in adj.items()}, dv, dom, caps, timeout))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for result in pool.map(_branch, branches):
            if result is not None:
                return result
    return None
