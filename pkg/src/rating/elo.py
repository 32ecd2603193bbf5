"""Elo rating model: win probabilities, expected outcomes and the K-factor update"""

import numpy as np

from ..errors import DimensionError
from ..game.round_robin import RatingVector, ScoreVector

# Length-N vector of expected game points per round
ExpectationVector = np.ndarray

ELO_SCALE = 400.0


def win_probability(rt_i, rt_j):
    """Expected winning probability of a player rated rt_i against one rated rt_j"""
    return 1.0 / (1.0 + np.power(10.0, (np.asarray(rt_j, dtype=float) - rt_i) / ELO_SCALE))


def expected_outcome(ratings: RatingVector) -> ExpectationVector:
    """
    Expected points of every player over one round robin

    ex_i is the sum of win probabilities against all opponents j != i.
    """
    ratings = np.asarray(ratings, dtype=float)
    if ratings.ndim != 1 or len(ratings) < 2:
        raise DimensionError(f"Need a vector of at least 2 ratings, got shape {ratings.shape}")
    if not np.all(np.isfinite(ratings)):
        raise ValueError("Ratings must be finite")
    probabilities = win_probability(ratings[:, None], ratings[None, :])
    np.fill_diagonal(probabilities, 0.0)
    return probabilities.sum(axis=1)


def elo_update(ratings: RatingVector, scores: ScoreVector, k_factor: float) -> RatingVector:
    """
    Ratings after one round: rt_i + K * (sc_i - ex_i)

    Args:
        ratings: Ratings the round was played with
        scores: Points each player made in that round
        k_factor: Update sensitivity K

    Returns:
        New rating vector; the rating sum is unchanged
    """
    ratings = np.asarray(ratings, dtype=float)
    scores = np.asarray(scores, dtype=float)
    if ratings.shape != scores.shape:
        raise DimensionError(f"Ratings {ratings.shape} and scores {scores.shape} differ in length")
    if not k_factor > 0:
        raise ValueError(f"k_factor must be positive, got {k_factor}")
    return ratings + k_factor * (scores - expected_outcome(ratings))
