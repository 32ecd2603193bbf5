"""Elo rating system"""

from .elo import ExpectationVector, elo_update, expected_outcome, win_probability

__all__ = ["ExpectationVector", "elo_update", "expected_outcome", "win_probability"]
