"""Golden replay of the two-round, five-player worked example"""

from typing import Any, Dict, List

import numpy as np

from ..game.game_config import GameConfig
from ..game.round_robin import MatchMatrix
from ..metrics import rank_with_ties
from .tournament import TournamentHistory, replay_series

N_PLAYERS = 5

# (winner, loser), zero-based. Round 0: #1 beats everyone, #2 > #3 > #4 > #2 cycle, #5 loses all.
ROUND_0 = [
    (0, 1), (0, 2), (0, 3), (0, 4),
    (1, 2), (2, 3), (3, 1),
    (1, 4), (2, 4), (3, 4),
]
# Round 1: cycles #1 > #5 > #2 > #1 and #2 > #4 > #5 > #2, #3 loses all.
ROUND_1 = [
    (0, 2), (0, 3), (0, 4), (1, 0),
    (1, 2), (1, 3), (4, 1),
    (3, 2), (4, 2), (3, 4),
]

TABLE1_CONFIG = GameConfig(
    n_players=N_PLAYERS,
    p_rand=0.0,
    k_factor=15.0,
    initial_rating=1600.0,
    initial_spread=0.0,
    n_instances=2,
    discard_transient=0,
    rng_seed=0,
)


def table1_matrices() -> List[MatchMatrix]:
    return [MatchMatrix.from_results(N_PLAYERS, ROUND_0), MatchMatrix.from_results(N_PLAYERS, ROUND_1)]


def replay_table1(config: GameConfig = TABLE1_CONFIG) -> TournamentHistory:
    """Replay both fixed rounds starting from equal ratings"""
    start = np.full(config.n_players, config.initial_rating)
    return replay_series(config, start, table1_matrices())


def table1_rows(history: TournamentHistory) -> List[Dict[str, Any]]:
    """One display row per player: rt(0), sc(0), rt(1), sc(1), rt(2) rounded, gp and its rank"""
    gp = history.metrics.gp
    ranks = rank_with_ties(gp)
    rows = []
    for player in range(history.config.n_players):
        row: Dict[str, Any] = {"player": player + 1}
        for k in range(history.n_instances):
            row[f"rt{k}"] = int(round(history.ratings[k, player]))
            row[f"sc{k}"] = int(history.scores[k, player])
        row[f"rt{history.n_instances}"] = int(round(history.ratings[-1, player]))
        row["gp"] = float(gp[player])
        row["rank"] = float(ranks[player])
        rows.append(row)
    return rows
