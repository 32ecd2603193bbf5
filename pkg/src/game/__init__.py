"""Players, round robin scheduling and game resolution"""

from .game_config import GameConfig
from .round_robin import (
    MatchMatrix,
    RatingVector,
    ScoreVector,
    initial_ratings,
    pair_indices,
    resolve_round,
    schedule_round_robin,
    scores,
)

__all__ = [
    "GameConfig",
    "MatchMatrix",
    "RatingVector",
    "ScoreVector",
    "initial_ratings",
    "pair_indices",
    "resolve_round",
    "schedule_round_robin",
    "scores",
]
