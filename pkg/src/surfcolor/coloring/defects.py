"""Defect vectors and verification of defective colorings.

Colors are the integers ``1 .. k``.  A coloring is a plain ``dict``
mapping every vertex to its color; it is a ``(d_1, ..., d_k)``-coloring
when each vertex colored ``i`` has at most ``d_i`` neighbors colored ``i``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple, Union

from ..embedding import EmbeddedGraph
from ..errors import PreconditionError

Coloring = dict[int, int]


@dataclass(frozen=True)
class DefectVector:
    defects: tuple[int, ...]

    def __post_init__(self):
        d = tuple(self.defects)
        if not d:
            raise PreconditionError("a defect vector needs at least one color")
        if any((not isinstance(x, int)) or x < 0 for x in d):
            raise PreconditionError(f"defects must be nonnegative integers, got {d}")
        object.__setattr__(self, "defects", d)

    @classmethod
    def parse(cls, text: str) -> "DefectVector":
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x != ""))
        except ValueError as exc:
            raise PreconditionError(f"cannot parse defect vector {text!r}") from exc

    @property
    def k(self) -> int:
        return len(self.defects)

    def bound(self, color: int) -> int:
        return self.defects[color - 1]

    @property
    def top(self) -> tuple[int, int] | None:
        """``(j, K)`` when ``d_1 = ... = d_j = K`` exceeds every later entry and ``j < k``."""
        K = self.defects[0]
        j = 1
        while j < self.k and self.defects[j] == K:
            j += 1
        if j == self.k or any(d >= K for d in self.defects[j:]):
            return None
        return j, K

    def relaxed_first(self) -> "DefectVector":
        return DefectVector((self.defects[0] + 1,) + self.defects[1:])

    def __str__(self):
        return ",".join(map(str, self.defects))

    def __iter__(self):
        return iter(self.defects)

    def __len__(self):
        return self.k


DefectsLike = Union[DefectVector, Sequence[int], str]


def as_defects(defects: DefectsLike) -> DefectVector:
    if isinstance(defects, DefectVector):
        return defects
    if isinstance(defects, str):
        return DefectVector.parse(defects)
    return DefectVector(tuple(defects))


def as_adjacency(graph) -> Mapping[int, Iterable[int]]:
    if isinstance(graph, EmbeddedGraph):
        return graph.adj
    return graph


class Violation(NamedTuple):
    vertex: int
    color: int
    same_colored: int
    allowed: int


def defect_counts(graph, coloring: Mapping[int, int]) -> dict[int, int]:
    """Same-colored neighbors of every colored vertex (uncolored neighbors ignored)."""
    adj = as_adjacency(graph)
    return {
        v: sum(1 for u in adj[v] if u in coloring and coloring[u] == coloring[v])
        for v in adj
        if v in coloring
    }


def is_saturated(graph, defects: DefectsLike, coloring: Mapping[int, int], v: int) -> bool:
    dv = as_defects(defects)
    return defect_counts(graph, coloring).get(v) == dv.bound(coloring[v])


def verify_coloring(graph, defects: DefectsLike, coloring: Mapping[int, int]) -> list[Violation]:
    """All vertices whose color class has too many of their neighbors.

    An empty list means ``coloring`` is a valid coloring for ``defects``.
    """
    adj = as_adjacency(graph)
    dv = as_defects(defects)
    missing = [v for v in adj if v not in coloring]
    if missing:
        raise PreconditionError(f"coloring is not total: {len(missing)} uncolored vertices, e.g. {missing[0]}")
    for v in adj:
        if not 1 <= coloring[v] <= dv.k:
            raise PreconditionError(f"vertex {v} has color {coloring[v]} outside 1..{dv.k}")
    counts = defect_counts(adj, coloring)
    return [
        Violation(v, coloring[v], counts[v], dv.bound(coloring[v]))
        for v in sorted(adj)
        if counts[v] > dv.bound(coloring[v])
    ]
