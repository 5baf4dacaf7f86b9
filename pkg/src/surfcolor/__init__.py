"""Defective coloring of graphs embedded on surfaces."""

from .embedding import EmbeddedGraph, build_embedding, euler_genus, is_orientable, trace_faces
from .errors import (
    EmbeddingError,
    FormatError,
    InvariantError,
    NotACycleError,
    PreconditionError,
    SurfColorError,
)
from .planarize import planarizing_subgraph, planarizing_subgraph_2pt
from .topology import CycleClass, classify_cycle, shortest_noncontractible_cycle

__version__ = "0.1.0"
