"""Colorings with one large-defect color, obtained by contracting a planarizing subgraph.

The planarizing subgraph ``H`` is contracted to a single vertex, the planar
quotient is colored with the hub on the big color and no neighbor of
its own color, and then all of ``H`` takes the big color.  Every vertex
has at most ``9g - 4`` neighbors in ``H``, and no vertex outside ``H``
next to ``H`` has the big color, so the defect of that color stays within
``9g - 4``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..embedding import EmbeddedGraph, euler_genus
from ..errors import InvariantError, PreconditionError
from ..planarize import PlanarizeResult, planarizing_subgraph
from .defects import Coloring, DefectVector, verify_coloring
from .solver import solve_exact

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineResult:
    coloring: Coloring
    defects: DefectVector
    genus: int
    h_vertices: frozenset[int]
    planarized: tuple[PlanarizeResult, ...]


def _run(G: EmbeddedGraph, small: tuple[int, ...], quotient_defects: tuple[int, ...], root_cap, what: str) -> PipelineResult:
    if not isinstance(G, EmbeddedGraph):
        raise PreconditionError("the pipelines need an embedded graph")
    pieces = G.components()
    genera = [euler_genus(p) for p in pieces]
    g = sum(genera)
    if g == 0:
        raise PreconditionError("graph is planar (Euler genus 0); the pipelines need g > 0")
    big = len(quotient_defects)
    defects = DefectVector(small + (9 * g - 4,))
    coloring: Coloring = {}
    H: set[int] = set()
    results = []
    for piece, gp in zip(pieces, genera):
        if gp == 0:
            part = solve_exact(piece.adj, quotient_defects)
            if part is None:
                raise InvariantError(f"planar component has no {what}-coloring")
            coloring.update(part)
            continue
        root = min(piece.vertices)
        res = planarizing_subgraph(piece, root)
        results.append(res)
        q = res.quotient_vertex
        caps = {q: 0} if root_cap else None
        part = solve_exact(res.quotient, quotient_defects, {q: big}, caps)
        if part is None:
            raise InvariantError(f"planar quotient has no {what}-coloring with the hub on color {big}")
        for x in piece.vertices:
            coloring[x] = big if x in res.h_vertices else part[x]
        H |= res.h_vertices
        log.info("component genus %d: |H| = %d, max neighbors in H = %d", gp, len(res.h_vertices), res.max_neighbors_in_h)
    bad = verify_coloring(G, defects, coloring)
    if bad:
        raise InvariantError(f"lifted coloring violates {defects} at vertex {bad[0].vertex}")
    for x in G.vertices:
        if x not in H and coloring[x] == big and any(y in H for y in G.neighbors(x)):
            raise InvariantError(f"vertex {x} next to H shares the color of H")
    return PipelineResult(coloring, defects, g, frozenset(H), tuple(results))


def color_000_9g4(G: EmbeddedGraph) -> PipelineResult:
    """A ``(0, 0, 0, 9g - 4)``-coloring via a proper 4-coloring of the planar quotient."""
    return _run(G, (0, 0, 0), (0, 0, 0, 0), False, "proper 4")


def color_22_9g4(G: EmbeddedGraph) -> PipelineResult:
    """A ``(2, 2, 9g - 4)``-coloring via a ``(2, 2, 2)``-coloring of the quotient in which the hub has no neighbor of its color."""
    return _run(G, (2, 2), (2, 2, 2), True, "(2,2,2)")
