"""Static and dynamic intransitivity measures"""

from .dynamic_measures import crd, crd_series, ptm
from .ranking import (
    RankVector,
    generalization_performance,
    rank_with_ties,
    running_generalization_performance,
    time_average,
)
from .static_measures import itx, itx_from_scores, itx_max, kld

__all__ = [
    "RankVector",
    "crd",
    "crd_series",
    "generalization_performance",
    "itx",
    "itx_from_scores",
    "itx_max",
    "kld",
    "ptm",
    "rank_with_ties",
    "running_generalization_performance",
    "time_average",
]
