"""Series of round robin tournaments with Elo updates and per-instance metrics"""

from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Union

import numpy as np
from scipy.stats import rankdata

from ..game.game_config import GameConfig
from ..game.round_robin import MatchMatrix, RatingVector, initial_ratings, resolve_round, scores
from ..metrics import (
    crd_series,
    generalization_performance,
    itx,
    kld,
    ptm,
    running_generalization_performance,
)
from ..metrics.dynamic_measures import PTM_WINDOW
from ..rating.elo import elo_update

SeedLike = Union[int, np.random.SeedSequence]


@dataclass
class MetricSeries:
    """Per-instance itx, kld and crd, windowed ptm over the retained instances, final gp"""

    instance_index: np.ndarray
    itx: np.ndarray
    kld: np.ndarray
    crd_sc_rt: np.ndarray
    crd_sc_gp: np.ndarray
    ptm_sc_rt: float
    ptm_sc_gp: float
    gp: np.ndarray


@dataclass
class TournamentHistory:
    """
    Full evolution of one series

    `ratings` has n_instances + 1 rows: row k holds rt(k), the ratings round k was played
    with, and row k + 1 the ratings after it. `scores`, `gp` and `matrices` have one entry
    per instance. `metrics` covers the retained instances only.
    """

    config: GameConfig
    ratings: np.ndarray
    scores: np.ndarray
    gp: np.ndarray
    matrices: List[MatchMatrix]
    metrics: MetricSeries

    @property
    def n_instances(self) -> int:
        return len(self.scores)

    @property
    def retained(self) -> slice:
        return slice(self.config.discard_transient, self.n_instances)

    @property
    def post_ratings(self) -> np.ndarray:
        """rt(k + 1) for every instance k"""
        return self.ratings[1:]

    @property
    def rank_sc(self) -> np.ndarray:
        return rankdata(-self.scores, method="average", axis=1)

    @property
    def rank_rt(self) -> np.ndarray:
        return rankdata(-self.post_ratings, method="average", axis=1)

    @property
    def rank_gp(self) -> np.ndarray:
        return rankdata(-self.gp, method="average", axis=1)


def _play(
    config: GameConfig,
    start: RatingVector,
    next_round: Callable[[int, RatingVector], MatchMatrix],
) -> TournamentHistory:
    n, total = config.n_players, config.n_instances
    ratings = np.empty((total + 1, n))
    ratings[0] = start
    score_history = np.empty((total, n), dtype=np.int64)
    matrices = []
    for k in range(total):
        matrix = next_round(k, ratings[k])
        if matrix.n != n:
            raise ValueError(f"Round {k} has {matrix.n} players, expected {n}")
        matrices.append(matrix)
        score_history[k] = scores(matrix)
        ratings[k + 1] = elo_update(ratings[k], score_history[k], config.k_factor)

    gp = running_generalization_performance(score_history, start=config.discard_transient)
    metrics = compute_metrics(config, ratings, score_history, gp, matrices)
    return TournamentHistory(config, ratings, score_history, gp, matrices, metrics)


def compute_metrics(
    config: GameConfig,
    ratings: np.ndarray,
    score_history: np.ndarray,
    gp: np.ndarray,
    matrices: List[MatchMatrix],
) -> MetricSeries:
    """Intransitivity measures over the retained instances of a series"""
    lo = config.discard_transient
    hi = len(score_history)
    sc = score_history[lo:hi]
    # sc(k) pairs with rt(k+1), the rating that round produced; kld scores round k against rt(k)
    rt_after = ratings[lo + 1:hi + 1]
    gp_retained = gp[lo:hi]

    enough_for_ptm = len(sc) >= PTM_WINDOW
    return MetricSeries(
        instance_index=np.arange(lo, hi),
        itx=np.array([itx(m) for m in matrices[lo:hi]], dtype=np.int64),
        kld=np.array([kld(m, ratings[k]) for k, m in enumerate(matrices[lo:hi], start=lo)]),
        crd_sc_rt=crd_series(sc, rt_after),
        crd_sc_gp=crd_series(sc, gp_retained),
        ptm_sc_rt=ptm(sc, rt_after) if enough_for_ptm else float("nan"),
        ptm_sc_gp=ptm(sc, gp_retained) if enough_for_ptm else float("nan"),
        gp=generalization_performance(sc),
    )


def run_time_series(config: GameConfig, rng_seed: Optional[SeedLike] = None) -> TournamentHistory:
    """
    Play config.n_instances round robins: resolve_round -> scores -> elo_update

    Args:
        config: Game parameters
        rng_seed: Seed (or SeedSequence) of the series; config.rng_seed when omitted

    Returns:
        History fully determined by (config, seed)
    """
    rng = np.random.default_rng(config.rng_seed if rng_seed is None else rng_seed)
    start = initial_ratings(config.n_players, config.initial_rating, config.initial_spread, rng)
    return _play(config, start, lambda k, current: resolve_round(current, config.p_rand, rng))


def replay_series(config: GameConfig, start: RatingVector, matrices: Iterable[MatchMatrix]) -> TournamentHistory:
    """Run the rating and metric pipeline over fixed outcome matrices"""
    fixed = list(matrices)
    if len(fixed) != config.n_instances:
        raise ValueError(f"Got {len(fixed)} outcome matrices for {config.n_instances} instances")
    return _play(config, np.asarray(start, dtype=float), lambda k, current: fixed[k])
