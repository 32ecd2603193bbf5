"""Monte-Carlo grid over (N, p_rand): time-averaged intransitivity measures per repetition"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ConfigError
from ..game.game_config import GameConfig
from ..metrics import itx_max, time_average
from ..metrics.dynamic_measures import PTM_WINDOW
from .statistics import DEFAULT_LEVEL, confidence_interval
from .tournament import TournamentHistory, run_time_series

DEFAULT_GRID_PLAYERS = [8, 16, 24, 32]
DEFAULT_GRID_P_RAND = [0.01, 0.10, 0.25, 0.50, 0.75]

METRIC_COLUMNS = [
    "itx_avg",
    "itx_norm",
    "kld_avg",
    "crd_sc_rt",
    "crd_sc_gp",
    "ptm_sc_rt",
    "ptm_sc_gp",
    "max_sc",
    "max_gp",
]

ProgressCallback = Callable[[int, int, str], None]


@dataclass
class ScatterCell:
    """All repetitions of one (N, p_rand) grid cell"""

    n_players: int
    p_rand: float
    rows: List[Dict[str, Any]] = field(default_factory=list)
    player_rows: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, Tuple[float, float, float]] = field(default_factory=dict)


@dataclass
class ScatterReport:
    """Grid of cells with per-repetition rows and 99 % confidence intervals"""

    cells: List[ScatterCell]
    repetitions: int
    instances: int
    discard: int
    base_seed: int
    level: float = DEFAULT_LEVEL

    def rows(self) -> List[Dict[str, Any]]:
        return [row for cell in self.cells for row in cell.rows]

    def player_rows(self) -> List[Dict[str, Any]]:
        return [row for cell in self.cells for row in cell.player_rows]

    def cell(self, n_players: int, p_rand: float) -> ScatterCell:
        for cell in self.cells:
            if cell.n_players == n_players and cell.p_rand == p_rand:
                return cell
        raise KeyError(f"No cell for N={n_players}, p_rand={p_rand}")


def repetition_seed(base_seed: int, cell_index: int, rep_index: int) -> np.random.SeedSequence:
    """Seed of one repetition: SeedSequence([base_seed, cell_index, rep_index])"""
    return np.random.SeedSequence([base_seed, cell_index, rep_index])


def summarize_history(history: TournamentHistory) -> Tuple[Dict[str, float], List[Dict[str, float]]]:
    """Time averages of one history over its retained instances, plus per-player averages"""
    config = history.config
    metrics = history.metrics
    window = history.retained
    itx_avg = time_average(metrics.itx)
    row = {
        "itx_avg": itx_avg,
        "itx_norm": itx_avg / itx_max(config.n_players),
        "kld_avg": time_average(metrics.kld),
        "crd_sc_rt": time_average(metrics.crd_sc_rt),
        "crd_sc_gp": time_average(metrics.crd_sc_gp),
        "ptm_sc_rt": metrics.ptm_sc_rt,
        "ptm_sc_gp": metrics.ptm_sc_gp,
        "max_sc": time_average(history.scores[window].max(axis=1)),
        "max_gp": float(metrics.gp.max()),
    }
    sc_avg = history.scores[window].mean(axis=0)
    rt_avg = history.post_ratings[window].mean(axis=0)
    players = [
        {"player": player + 1, "itx_avg": itx_avg, "sc_avg": float(sc_avg[player]),
         "rt_avg": float(rt_avg[player]), "gp": float(metrics.gp[player])}
        for player in range(config.n_players)
    ]
    return row, players


def _run_repetition(task: Tuple[GameConfig, int, int, int]) -> Tuple[int, int, Dict[str, float], List[Dict[str, float]]]:
    config, base_seed, cell_index, rep_index = task
    history = run_time_series(config, repetition_seed(base_seed, cell_index, rep_index))
    row, players = summarize_history(history)
    return cell_index, rep_index, row, players


def _validate_grid(grid_players: Sequence[int], grid_p_rand: Sequence[float], reps: int, instances: int, discard: int):
    if not grid_players:
        raise ConfigError("grid_players", "must list at least one player count")
    if not grid_p_rand:
        raise ConfigError("grid_p_rand", "must list at least one p_rand level")
    if len(set(grid_players)) != len(grid_players):
        raise ConfigError("grid_players", f"contains duplicates: {list(grid_players)}")
    if len(set(grid_p_rand)) != len(grid_p_rand):
        raise ConfigError("grid_p_rand", f"contains duplicates: {list(grid_p_rand)}")
    if reps < 2:
        raise ConfigError("repetitions", f"must be >= 2 for confidence intervals, got {reps}")
    if not 0 <= discard < instances:
        raise ConfigError("scatter_discard", f"must be in [0, instances), got {discard} with instances={instances}")
    if instances - discard < PTM_WINDOW:
        raise ConfigError("scatter_instances", f"need at least {PTM_WINDOW} retained instances, got {instances - discard}")


def run_scatter(
    grid_players: Sequence[int],
    grid_p_rand: Sequence[float],
    reps: int,
    instances: int,
    discard: int,
    base_seed: int,
    base_config: Optional[GameConfig] = None,
    workers: int = 1,
    progress_callback: Optional[ProgressCallback] = None,
    level: float = DEFAULT_LEVEL,
) -> ScatterReport:
    """
    Run `reps` independent series for every (N, p_rand) cell

    Args:
        grid_players: Player counts N
        grid_p_rand: Random-game fractions
        reps: Repetitions per cell
        instances: Round robins per repetition
        discard: Leading instances excluded from the time averages
        base_seed: Root of every repetition seed
        base_config: Source of K, initial rating and spread
        workers: Process count; results do not depend on it
        progress_callback: Called as (done, total, message) after each repetition

    Returns:
        ScatterReport ordered by cell, then repetition
    """
    _validate_grid(grid_players, grid_p_rand, reps, instances, discard)
    base_config = base_config or GameConfig()

    cells: List[ScatterCell] = []
    tasks = []
    for n_players in grid_players:
        for p_rand in grid_p_rand:
            config = replace(
                base_config,
                n_players=int(n_players),
                p_rand=float(p_rand),
                n_instances=instances,
                discard_transient=discard,
                rng_seed=base_seed,
            )
            cell_index = len(cells)
            cells.append(ScatterCell(config.n_players, config.p_rand))
            tasks.extend((config, base_seed, cell_index, rep) for rep in range(reps))

    results: Dict[Tuple[int, int], Tuple[Dict[str, float], List[Dict[str, float]]]] = {}

    def collect(done: int, outcome) -> None:
        cell_index, rep_index, row, players = outcome
        results[(cell_index, rep_index)] = (row, players)
        if progress_callback:
            cell = cells[cell_index]
            progress_callback(done, len(tasks), f"N={cell.n_players} p_rand={cell.p_rand} rep {rep_index + 1}/{reps}")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for done, outcome in enumerate(pool.map(_run_repetition, tasks, chunksize=max(1, reps // workers)), start=1):
                collect(done, outcome)
    else:
        for done, task in enumerate(tasks, start=1):
            collect(done, _run_repetition(task))

    for cell_index, cell in enumerate(cells):
        for rep in range(reps):
            row, players = results[(cell_index, rep)]
            keys = {"N": cell.n_players, "p_rand": cell.p_rand, "rep": rep}
            cell.rows.append({**keys, **row})
            cell.player_rows.extend({**keys, **player} for player in players)
        for column in METRIC_COLUMNS:
            samples = [row[column] for row in cell.rows]
            lo, hi = confidence_interval(samples, level)
            cell.summary[column] = (float(np.mean(samples)), lo, hi)

    return ScatterReport(cells, reps, instances, discard, base_seed, level)
