"""Dynamic (coevolutionary) intransitivity: rank disagreement between subjective and objective fitness"""

import numpy as np
from scipy.stats import rankdata

from ..errors import DimensionError
from .ranking import rank_with_ties

PTM_WINDOW = 3


def crd(sub, obj) -> float:
    """
    Collective ranking difference of one instance

    Sum over players of |rank(sub)_i - rank(obj)_i|, divided by floor(N^2 / 2), the
    largest total displacement any pair of rankings can reach.
    """
    sub = np.asarray(sub, dtype=float)
    obj = np.asarray(obj, dtype=float)
    if sub.shape != obj.shape or sub.ndim != 1:
        raise DimensionError(f"Subjective {sub.shape} and objective {obj.shape} fitness must be equal-length vectors")
    n = len(sub)
    if n < 2:
        raise ValueError(f"crd needs at least 2 players, got {n}")
    displacement = np.abs(rank_with_ties(sub) - rank_with_ties(obj)).sum()
    return float(displacement / (n * n // 2))


def crd_series(sub_series, obj_series) -> np.ndarray:
    """crd of every instance of two (T, N) fitness histories"""
    sub = np.asarray(sub_series, dtype=float)
    obj = np.asarray(obj_series, dtype=float)
    if sub.shape != obj.shape or sub.ndim != 2:
        raise DimensionError(f"Series shapes differ or are not (T, N): {sub.shape} vs {obj.shape}")
    n = sub.shape[1]
    if n < 2:
        raise ValueError(f"crd needs at least 2 players, got {n}")
    displacement = np.abs(rankdata(-sub, method="average", axis=1) - rankdata(-obj, method="average", axis=1))
    return displacement.sum(axis=1) / (n * n // 2)


def _window_ranks(series: np.ndarray, window: int) -> np.ndarray:
    # (T - window + 1, window, N): ranks of each player's values inside every window
    windows = np.lib.stride_tricks.sliding_window_view(series, window, axis=0)
    windows = np.moveaxis(windows, -1, 1)
    return rankdata(-windows, method="average", axis=1)


def ptm(sub_series, obj_series, window: int = PTM_WINDOW) -> float:
    """
    Player-wise temporal mismatch

    For every player and every run of `window` consecutive instances, the ranking of the
    subjective values in time is compared with the ranking of the objective values. The
    result is the fraction of (player, window) pairs whose rank vectors differ.

    Args:
        sub_series: Subjective fitness, shape (T, N)
        obj_series: Objective fitness, shape (T, N)
        window: Number of consecutive instances per comparison

    Returns:
        Mismatch fraction in [0, 1]
    """
    sub = np.asarray(sub_series, dtype=float)
    obj = np.asarray(obj_series, dtype=float)
    if sub.ndim == 1:
        sub = sub[:, None]
    if obj.ndim == 1:
        obj = obj[:, None]
    if sub.shape != obj.shape:
        raise DimensionError(f"Series shapes differ: {sub.shape} vs {obj.shape}")
    n_instances, n_players = sub.shape
    if n_instances < window:
        raise ValueError(f"ptm needs at least {window} instances, got {n_instances}")

    mismatched = np.any(_window_ranks(sub, window) != _window_ranks(obj, window), axis=1)
    return float(np.count_nonzero(mismatched) / (n_players * (n_instances - window + 1)))
