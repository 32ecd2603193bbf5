#!/usr/bin/env python3
"""
Experiment Tests
Worked-example replay, seeded time series, scatter grid and confidence intervals
"""

import math
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

from src.errors import ConfigError
from src.experiments import (
    METRIC_COLUMNS,
    confidence_interval,
    replay_table1,
    run_scatter,
    run_time_series,
    table1_rows,
)
from src.game import GameConfig, resolve_round, scores
from src.metrics import crd, itx_max, ptm, rank_with_ties
from src.rating import elo_update

SMALL_GRID = dict(grid_players=[4, 6], grid_p_rand=[0.0, 0.5], reps=3, instances=12, discard=2, base_seed=17)


def test_table1_replay():
    history = replay_table1()
    assert history.scores.tolist() == [[4, 2, 2, 2, 0], [3, 3, 0, 2, 2]]
    assert history.metrics.itx.tolist() == [1, 2]
    assert np.allclose(history.ratings[1], [1630, 1600, 1600, 1600, 1570])
    assert np.allclose(history.ratings[2], [1641.78, 1615, 1570, 1600, 1573.22], atol=0.01)
    assert abs(history.metrics.kld[0] - math.log(2)) < 1e-12

    rows = table1_rows(history)
    assert [r["rt2"] for r in rows] == [1642, 1615, 1570, 1600, 1573]
    assert [r["gp"] for r in rows] == [3.5, 2.5, 1.0, 2.0, 1.0]
    assert [r["rank"] for r in rows] == [1.0, 2.0, 4.5, 3.0, 4.5]


def test_scores_pair_with_post_round_ratings():
    history = replay_table1()
    # Round 0 scores rank players exactly as rt(1) does, while rt(0) is a five-way tie
    assert history.metrics.crd_sc_rt[0] == 0.0
    assert abs(crd(history.scores[0], history.ratings[0]) - 1 / 3) < 1e-12
    assert abs(history.metrics.crd_sc_rt[1] - 1 / 6) < 1e-12

    config = GameConfig(n_players=6, p_rand=0.3, n_instances=25, discard_transient=5, rng_seed=4)
    series = run_time_series(config)
    assert series.metrics.ptm_sc_rt == ptm(series.scores[5:], series.ratings[6:])


def test_time_series_is_reproducible():
    config = GameConfig(n_players=7, p_rand=0.3, n_instances=15, rng_seed=123)
    a, b = run_time_series(config), run_time_series(config)
    assert np.array_equal(a.scores, b.scores)
    assert np.array_equal(a.ratings, b.ratings)
    c = run_time_series(config, rng_seed=124)
    assert not np.array_equal(a.scores, c.scores)


def test_time_series_invariants():
    config = GameConfig(n_players=6, p_rand=0.25, n_instances=30, discard_transient=5, rng_seed=1)
    history = run_time_series(config)
    n = config.n_players
    assert history.ratings.shape == (31, n)
    assert np.all(history.scores.sum(axis=1) == n * (n - 1) // 2)
    assert np.allclose(history.ratings.sum(axis=1), history.ratings[0].sum())
    metrics = history.metrics
    assert len(metrics.itx) == config.retained_instances
    assert np.all((metrics.itx >= 0) & (metrics.itx <= itx_max(n)))
    assert np.all((metrics.crd_sc_rt >= 0) & (metrics.crd_sc_rt <= 1))
    assert 0.0 <= metrics.ptm_sc_rt <= 1.0
    assert np.allclose(metrics.gp, history.scores[5:].mean(axis=0))
    assert np.allclose(history.gp[-1], metrics.gp)


def test_deterministic_game_is_transitive():
    config = GameConfig(n_players=8, p_rand=0.0, n_instances=40, rng_seed=3)
    history = run_time_series(config)
    assert np.all(history.metrics.itx == 0)
    # Ratings keep their order under the update, so score and rating rankings agree
    assert np.all(history.metrics.crd_sc_rt == 0.0)
    assert history.metrics.kld[-1] < history.metrics.kld[0]


def test_random_game_statistics():
    config = GameConfig(n_players=8, p_rand=1.0, n_instances=300, rng_seed=8)
    history = run_time_series(config)
    # A uniformly random tournament has C(n, 3) / 4 cyclic triads on average
    assert abs(history.metrics.itx.mean() / itx_max(8) - 0.25) < 0.03
    # Every player's long-run score is (N - 1) / 2
    assert np.all(np.abs(history.metrics.gp - 3.5) < 0.4)


def test_long_chain_conservation():
    rng = np.random.default_rng(99)
    ratings = 1600.0 + rng.uniform(-5, 5, 16)
    total = ratings.sum()
    for _ in range(10_000):
        sc = scores(resolve_round(ratings, 0.5, rng))
        assert sc.sum() == 120
        ratings = elo_update(ratings, sc, 15.0)
    assert abs(ratings.sum() - total) < 1e-6
    assert rank_with_ties(sc).sum() == 136


def test_low_and_high_randomness_regimes():
    spread_grew = 0
    gp_means = []
    for seed in range(100):
        calm = run_time_series(GameConfig(n_players=6, p_rand=0.01, n_instances=20, rng_seed=seed))
        if np.ptp(calm.ratings[-1]) > np.ptp(calm.ratings[0]):
            spread_grew += 1
        noisy = run_time_series(GameConfig(n_players=6, p_rand=0.75, n_instances=20, rng_seed=seed))
        gp_means.append(noisy.metrics.gp)
    assert spread_grew >= 95
    assert np.all(np.abs(np.mean(gp_means, axis=0) - 2.5) < 0.6)


def test_itx_increases_with_p_rand():
    report = run_scatter([16], [0.01, 0.10, 0.25, 0.50, 0.75], reps=20, instances=200, discard=40, base_seed=0)
    intervals = [cell.summary["itx_avg"] for cell in report.cells]
    # Adjacent 99% intervals do not overlap
    for (_, _, hi), (_, lo, _) in zip(intervals, intervals[1:]):
        assert hi < lo, intervals


def test_itx_kld_proportional():
    report = run_scatter([8, 16, 24, 32], [0.01, 0.10, 0.25, 0.50, 0.75], reps=5, instances=200, discard=40, base_seed=0)
    assert len(report.cells) == 20
    itx_norm_means = [cell.summary["itx_norm"][0] for cell in report.cells]
    kld_means = [cell.summary["kld_avg"][0] for cell in report.cells]
    assert np.corrcoef(itx_norm_means, kld_means)[0, 1] >= 0.9


def test_scatter_grid_shape_and_intervals():
    report = run_scatter(**SMALL_GRID)
    assert len(report.cells) == 4
    assert len(report.rows()) == 4 * 3
    assert len(report.player_rows()) == (4 + 4 + 6 + 6) * 3
    for cell in report.cells:
        assert set(cell.summary) == set(METRIC_COLUMNS)
        for mean, lo, hi in cell.summary.values():
            assert lo <= mean <= hi
    deterministic = report.cell(6, 0.0)
    assert deterministic.summary["itx_avg"][0] == 0.0
    assert report.cell(6, 0.5).summary["itx_norm"][0] > 0.0


def test_scatter_is_reproducible_across_worker_counts():
    progress = []
    serial = run_scatter(**SMALL_GRID, progress_callback=lambda done, total, _: progress.append((done, total)))
    parallel = run_scatter(**SMALL_GRID, workers=2)
    assert serial.rows() == parallel.rows()
    assert serial.player_rows() == parallel.player_rows()
    assert progress[-1] == (12, 12)


def test_scatter_rejects_bad_grid():
    for kwargs, key in (
        ({**SMALL_GRID, "reps": 1}, "repetitions"),
        ({**SMALL_GRID, "grid_players": []}, "grid_players"),
        ({**SMALL_GRID, "discard": 12}, "scatter_discard"),
    ):
        try:
            run_scatter(**kwargs)
        except ConfigError as e:
            assert e.key == key
        else:
            raise AssertionError(f"expected ConfigError for {key}")


def test_confidence_interval():
    lo, hi = confidence_interval([1, 2, 3, 4, 5])
    half_width = 2.5758293035489 * math.sqrt(2.5) / math.sqrt(5)
    assert abs(lo - (3 - half_width)) < 1e-6
    assert abs(hi - (3 + half_width)) < 1e-6
    assert confidence_interval([2.0, 2.0, 2.0]) == (2.0, 2.0)
    lo, hi = confidence_interval([0.0, 1.0])
    assert abs((hi - lo) / 2 - 1.288) < 1e-3
    try:
        confidence_interval([1.0])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


TESTS = [
    ("Worked example replay", test_table1_replay),
    ("Scores pair with post-round ratings", test_scores_pair_with_post_round_ratings),
    ("Series reproducible", test_time_series_is_reproducible),
    ("Series invariants", test_time_series_invariants),
    ("Deterministic game", test_deterministic_game_is_transitive),
    ("Random game statistics", test_random_game_statistics),
    ("Long chain conservation", test_long_chain_conservation),
    ("Randomness regimes", test_low_and_high_randomness_regimes),
    ("itx intervals separate with p_rand", test_itx_increases_with_p_rand),
    ("itx and kld proportional", test_itx_kld_proportional),
    ("Scatter grid", test_scatter_grid_shape_and_intervals),
    ("Scatter worker count", test_scatter_is_reproducible_across_worker_counts),
    ("Scatter validation", test_scatter_rejects_bad_grid),
    ("Confidence interval", test_confidence_interval),
]


if __name__ == "__main__":
    failed = 0
    for name, func in TESTS:
        try:
            func()
            print(f"✅ PASS: {name}")
        except Exception as e:
            print(f"❌ FAIL: {name} - {e}")
            failed += 1
    sys.exit(0 if failed == 0 else 1)
