"""Exact counting of connected vertex subsets in clique-column and grid strips."""

from gridsets.bound import (
    BoundEngine,
    PairCase,
    RunLabels,
    classify_pair,
    excess_lower_bound,
    grid_upper_bound,
    run_labels,
    window_components,
)
from gridsets.grids import (
    Family,
    GridSpec,
    VertexSet,
    column_runs,
    component_count,
    components,
    is_connected,
    reflect_mask,
)
from gridsets.oracle import (
    BudgetExceededError,
    RestrictionPattern,
    brute_count,
    brute_count_spanning,
    brute_excess,
    enumeration_budget,
    profile_count,
)
from gridsets.recurrences import (
    MERGE_PAIR_SEQUENCES_3,
    MERGE_PAIR_SEQUENCES_4,
    excess_count,
    grid_count,
    grid_spanning_count,
)
from gridsets.transfer import (
    pinned_counts,
    spanning_count,
    total_count,
    transfer_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BoundEngine",
    "BudgetExceededError",
    "Family",
    "GridSpec",
    "MERGE_PAIR_SEQUENCES_3",
    "MERGE_PAIR_SEQUENCES_4",
    "PairCase",
    "RestrictionPattern",
    "RunLabels",
    "VertexSet",
    "brute_count",
    "brute_count_spanning",
    "brute_excess",
    "classify_pair",
    "column_runs",
    "component_count",
    "components",
    "enumeration_budget",
    "excess_count",
    "excess_lower_bound",
    "grid_count",
    "grid_spanning_count",
    "grid_upper_bound",
    "is_connected",
    "pinned_counts",
    "profile_count",
    "reflect_mask",
    "run_labels",
    "spanning_count",
    "total_count",
    "transfer_matrix",
    "window_components",
]
