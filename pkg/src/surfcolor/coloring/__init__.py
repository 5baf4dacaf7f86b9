from .defects import Coloring, DefectVector, Violation, as_defects, defect_counts, is_saturated, verify_coloring
from .lemmas import HighPartitionResult, color_via_high_partition, extend_to_vertex
from .pipelines import PipelineResult, color_000_9g4, color_22_9g4
from .solver import SearchTimeout, pin_conflict, solve_exact
from .threshold import FAMILIES, Surd, defect_bound, exact_threshold, residual, threshold

__all__ = [
    "Coloring",
    "DefectVector",
    "Violation",
    "as_defects",
    "defect_counts",
    "is_saturated",
    "verify_coloring",
    "HighPartitionResult",
    "color_via_high_partition",
    "extend_to_vertex",
    "PipelineResult",
    "color_000_9g4",
    "color_22_9g4",
    "SearchTimeout",
    "pin_conflict",
    "solve_exact",
    "FAMILIES",
    "Surd",
    "defect_bound",
    "exact_threshold",
    "residual",
    "threshold",
]
