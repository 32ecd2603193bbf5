"""Tied-rank rankings, generalization performance and time averages"""

from typing import Sequence

import numpy as np
from scipy.stats import rankdata

# Length-N vector of ranks, 1 = best, ties share the mean of the positions they span
RankVector = np.ndarray


def rank_with_ties(values: Sequence[float], higher_is_better: bool = True) -> RankVector:
    """
    Rank a value vector with average ranks for ties

    Args:
        values: Fitness values, one per player
        higher_is_better: When True the largest value gets rank 1

    Returns:
        Rank vector whose sum is always N(N+1)/2
    """
    values = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(values)):
        raise ValueError("Cannot rank non-finite values")
    return rankdata(-values if higher_is_better else values, method="average")


def generalization_performance(score_history) -> np.ndarray:
    """Mean score per player over the given instances (rows = instances)"""
    history = np.asarray(score_history, dtype=float)
    if history.size == 0 or history.shape[0] == 0:
        raise ValueError("Generalization performance needs at least one instance")
    if history.ndim == 1:
        history = history[None, :]
    return history.mean(axis=0)


def running_generalization_performance(score_history, start: int = 0) -> np.ndarray:
    """
    Prefix means of the score history

    Rows before `start` average over the instances 0..k, rows from `start` on over
    start..k, so a transient prefix never leaks into the retained gp.
    """
    history = np.asarray(score_history, dtype=float)
    running = np.empty_like(history)
    for lo, hi in ((0, start), (start, len(history))):
        if hi > lo:
            block = history[lo:hi]
            counts = np.arange(1, hi - lo + 1, dtype=float)[:, None]
            running[lo:hi] = np.cumsum(block, axis=0) / counts
    return running


def time_average(series: Sequence[float]) -> float:
    """Arithmetic mean over the retained instances"""
    values = np.asarray(series, dtype=float)
    if values.size == 0:
        raise ValueError("Cannot average an empty series")
    return float(values.mean())
