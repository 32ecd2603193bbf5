"""Seeded Monte-Carlo experiments"""

from .scatter import (
    DEFAULT_GRID_P_RAND,
    DEFAULT_GRID_PLAYERS,
    METRIC_COLUMNS,
    ScatterCell,
    ScatterReport,
    repetition_seed,
    run_scatter,
    summarize_history,
)
from .statistics import confidence_interval
from .table1 import TABLE1_CONFIG, replay_table1, table1_matrices, table1_rows
from .tournament import MetricSeries, TournamentHistory, compute_metrics, replay_series, run_time_series

__all__ = [
    "DEFAULT_GRID_P_RAND",
    "DEFAULT_GRID_PLAYERS",
    "METRIC_COLUMNS",
    "MetricSeries",
    "ScatterCell",
    "ScatterReport",
    "TABLE1_CONFIG",
    "TournamentHistory",
    "compute_metrics",
    "confidence_interval",
    "repetition_seed",
    "replay_series",
    "replay_table1",
    "run_scatter",
    "run_time_series",
    "summarize_history",
    "table1_matrices",
    "table1_rows",
]
