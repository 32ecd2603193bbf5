"""Static (game-induced) intransitivity: cyclic triads and rating-prediction divergence"""

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Tuple

import numpy as np

from ..errors import DimensionError
from ..game.round_robin import MatchMatrix, RatingVector, ScoreVector
from ..rating.elo import win_probability

KLD_EPSILON = 1e-12


def itx_max(n: int) -> int:
    """Maximal number of static intransitivities among n players: C(n, 3)"""
    if n < 3:
        raise ValueError(f"itx_max needs at least 3 players, got {n}")
    return (n - 2) * (n - 1) * n // 6


@lru_cache(maxsize=None)
def _triads(n: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    triples = np.array(list(combinations(range(n), 3)), dtype=np.intp).reshape(-1, 3)
    columns = tuple(triples[:, c] for c in range(3))
    for column in columns:
        column.setflags(write=False)
    return columns


def itx(m: MatchMatrix) -> int:
    """Intransitivity index: number of triads forming a rock-paper-scissors cycle"""
    if m.n < 3:
        return 0
    a, b, c = _triads(m.n)
    w = m.w
    forward = w[a, b] & w[b, c] & w[c, a]
    backward = w[a, c] & w[c, b] & w[b, a]
    return int(np.count_nonzero(forward | backward))


def itx_from_scores(scores: ScoreVector) -> int:
    """
    Cyclic triad count from the score sequence alone: C(n, 3) - sum_i C(sc_i, 2)

    Only valid for scores of a complete round robin without draws.
    """
    values = np.asarray(scores, dtype=float)
    n = len(values)
    if not np.all(values == np.round(values)):
        raise ValueError("Scores must be integers")
    as_int = values.astype(np.int64)
    if np.any(as_int < 0) or np.any(as_int > n - 1):
        raise ValueError(f"Scores must lie in [0, {n - 1}]")
    if int(as_int.sum()) != n * (n - 1) // 2:
        raise ValueError(f"Scores must sum to {n * (n - 1) // 2}, got {int(as_int.sum())}")
    return comb(n, 3) - sum(comb(int(s), 2) for s in as_int)


def kld(m: MatchMatrix, ratings: RatingVector) -> float:
    """
    Mean Bernoulli KL divergence between the rating prediction and the actual outcome

    For every game the winner's predicted probability p contributes -ln p (clamped to
    [eps, 1 - eps]); the result is averaged over all n(n-1)/2 games.

    Args:
        m: Outcome matrix of the round
        ratings: The pre-round ratings that generated the round

    Returns:
        Nonnegative divergence; ln 2 when every prediction is 0.5
    """
    ratings = np.asarray(ratings, dtype=float)
    if ratings.shape != (m.n,):
        raise DimensionError(f"Expected {m.n} ratings, got shape {ratings.shape}")
    winners, losers = np.nonzero(m.w)
    if len(winners) == 0:
        return 0.0
    p = np.clip(win_probability(ratings[winners], ratings[losers]), KLD_EPSILON, 1.0 - KLD_EPSILON)
    return float(np.mean(-np.log(p)))
