"""Round robin scheduling and game resolution for the simple random game"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Tuple

import numpy as np

from ..errors import ConfigError, DimensionError

# Length-N float vectors; kept as plain ndarrays so numpy does the arithmetic.
RatingVector = np.ndarray
ScoreVector = np.ndarray


@dataclass(frozen=True)
class MatchMatrix:
    """Binary outcome table of one round robin: w[i, j] == 1 iff player i beat player j"""

    w: np.ndarray

    def __post_init__(self):
        w = np.array(self.w, dtype=np.int8)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise DimensionError(f"Outcome table must be square, got shape {w.shape}")
        n = w.shape[0]
        off_diagonal = ~np.eye(n, dtype=bool)
        if np.any(np.diag(w) != 0):
            raise ValueError("Outcome table diagonal must be zero")
        if np.any((w + w.T)[off_diagonal] != 1):
            raise ValueError("Outcome table must satisfy w[i][j] + w[j][i] == 1 for all i != j")
        w.setflags(write=False)
        object.__setattr__(self, "w", w)

    @property
    def n(self) -> int:
        return self.w.shape[0]

    @classmethod
    def from_results(cls, n: int, results: Iterable[Tuple[int, int]]) -> "MatchMatrix":
        """
        Build a matrix from (winner, loser) pairs

        Args:
            n: Number of players
            results: One (winner, loser) pair per game, zero-based

        Returns:
            Validated MatchMatrix
        """
        w = np.zeros((n, n), dtype=np.int8)
        for winner, loser in results:
            w[winner, loser] = 1
        return cls(w)


@lru_cache(maxsize=None)
def pair_indices(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Row and column indices of all pairs i < j in schedule order"""
    rows, cols = np.triu_indices(n, k=1)
    rows.setflags(write=False)
    cols.setflags(write=False)
    return rows, cols


def schedule_round_robin(n: int) -> List[Tuple[int, int]]:
    """Every unordered pair (i, j), i < j, exactly once"""
    if n < 2:
        raise ConfigError("n_players", f"a round robin needs at least 2 players, got {n}")
    rows, cols = pair_indices(n)
    return [(int(i), int(j)) for i, j in zip(rows, cols)]


def initial_ratings(n: int, initial_rating: float, initial_spread: float, rng: np.random.Generator) -> RatingVector:
    """Ratings slightly spread around a common value: rating + U[-spread, +spread]"""
    if initial_spread == 0:
        return np.full(n, float(initial_rating))
    return initial_rating + rng.uniform(-initial_spread, initial_spread, size=n)


def resolve_round(ratings: RatingVector, p_rand: float, rng: np.random.Generator) -> MatchMatrix:
    """
    Play one round robin

    Each game is independently random with probability p_rand and then decided by a fair
    coin; otherwise the strictly higher rated player wins. Exact rating ties in a
    deterministic game also fall back to the coin.

    Args:
        ratings: Pre-round ratings, one per player
        p_rand: Probability that a game has a random result
        rng: Random stream owned by the caller

    Returns:
        Outcome matrix of the round
    """
    ratings = np.asarray(ratings, dtype=float)
    if not np.all(np.isfinite(ratings)):
        raise ValueError("Ratings must be finite")
    if not 0.0 <= p_rand <= 1.0:
        raise ValueError(f"p_rand must be in [0, 1], got {p_rand}")

    n = len(ratings)
    rows, cols = pair_indices(n)
    # Both draws happen for every game so the stream advances the same way whatever the ratings are.
    is_random = rng.random(len(rows)) < p_rand
    coin = rng.random(len(rows)) < 0.5

    r_row, r_col = ratings[rows], ratings[cols]
    row_wins = np.where(is_random | (r_row == r_col), coin, r_row > r_col)

    w = np.zeros((n, n), dtype=np.int8)
    w[rows[row_wins], cols[row_wins]] = 1
    w[cols[~row_wins], rows[~row_wins]] = 1
    return MatchMatrix(w)


def scores(m: MatchMatrix) -> ScoreVector:
    """Game points per player: one per win"""
    return m.w.sum(axis=1, dtype=np.int64)
