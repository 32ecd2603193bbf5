#!/usr/bin/env python3
"""Main CLI entry point for intransim - coevolutionary intransitivity simulator"""

import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click
import numpy as np
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from src import __version__
from src.config import Config, parse_config
from src.errors import IntransimError, UsageError
from src.experiments import replay_table1, run_scatter, run_time_series, table1_rows
from src.metrics import itx_max
from src.substrate import LandscapeFactory, Population, evaluate_population
from src.template_engine import TemplateEngine
from src.writers import (
    RunManifest,
    emit_standard_views,
    emit_svg_scatter,
    read_csv_table,
    write_manifest,
    write_rows,
    write_scatter_csv,
    write_timeseries_csv,
)


console = Console()

SUBSTRATE_COLUMNS = ["index", "s", "f_obj", "f_sub", "f_sub_mean", "f_sub_expected"]


def _float_list(_ctx, _param, value: Optional[str]) -> Optional[List[float]]:
    if value is None:
        return None
    try:
        return [float(v) for v in value.replace(",", " ").split()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got {value!r}")


def _int_list(_ctx, _param, value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(v) for v in value.replace(",", " ").split()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def common_options(func: Callable) -> Callable:
    func = click.option('--verbose', '-v', is_flag=True, help='Verbose output')(func)
    func = click.option('--output-dir', '-o', help='Directory for CSV/SVG/manifest output (default: from config)')(func)
    func = click.option('--seed', type=int, help='RNG seed (overrides the config file and INTRANS_SEED)')(func)
    func = click.option('--config', '-c', 'config_path', help='Path to a config.yaml or a manifest.yaml')(func)
    return func


def game_options(func: Callable) -> Callable:
    func = click.option('--discard', type=int, help='Leading instances excluded from metrics')(func)
    func = click.option('--instances', type=int, help='Number of round robin instances')(func)
    func = click.option('--initial-spread', type=float, help='Half-width of the initial rating perturbation')(func)
    func = click.option('--initial-rating', type=float, help='Common initial rating')(func)
    func = click.option('--k-factor', type=float, help='Elo K-factor')(func)
    func = click.option('--p-rand', type=float, help='Fraction of games with a random result')(func)
    func = click.option('--n-players', type=int, help='Number of players N')(func)
    return func


def _run_command(name: str, verbose: bool, body: Callable[[RunManifest], None], config: Config) -> None:
    """Time a subcommand body and write its manifest next to the artifacts it produced"""
    started = time.perf_counter()
    manifest = RunManifest(command=name, seed=config.get("rng_seed"), config=config.to_dict())
    if verbose:
        console.print(f"[dim]Configuration: {config.to_dict()}[/dim]\n")
    body(manifest)
    manifest.duration_seconds = time.perf_counter() - started
    manifest_path = write_manifest(manifest, config.get("output_dir"))
    console.print(f"[bold green]✓ {name} finished[/bold green]")
    for artifact in manifest.artifacts:
        console.print(f"[dim]Output: {artifact}[/dim]")
    console.print(f"[dim]Manifest: {manifest_path}[/dim]\n")


def _load(config_path: Optional[str], overrides: Dict[str, Any], fast: bool = False) -> Config:
    try:
        return parse_config(config_path, overrides, fast=fast)
    except IntransimError as e:
        console.print(f"[bold red]✗ Configuration error: {e}[/bold red]")
        raise click.Abort()


def _guard(verbose: bool, action: Callable[[], None]) -> None:
    try:
        action()
    except UsageError as e:
        raise click.UsageError(str(e))
    except click.ClickException:
        raise
    except Exception as e:
        console.print(f"\n[bold red]✗ Error: {e}[/bold red]\n")
        if verbose:
            import traceback
            console.print(f"[dim]{traceback.format_exc()}[/dim]")
        raise click.Abort()


@click.group(invoke_without_command=True)
@click.version_option(version=__version__, prog_name="intransim")
@click.pass_context
def main(ctx):
    """Simulate the simple random game and measure static and dynamic intransitivity"""
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        ctx.exit(2)


@main.command()
@common_options
def table1(config_path, seed, output_dir, verbose):
    """Replay the two-round, five-player worked example from fixed outcome matrices"""
    config = _load(config_path, {"rng_seed": seed, "output_dir": output_dir})

    def body(manifest: RunManifest):
        history = replay_table1()
        rows = table1_rows(history)
        out = Path(config.get("output_dir"))

        table = Table(title="Worked example (ratings display-rounded)")
        for column in ("Player", "rt(0)", "sc(0)", "rt(1)", "sc(1)", "rt(2)", "gp", "rank"):
            table.add_column(column, justify="right")
        for row in rows:
            table.add_row(f"#{row['player']}", str(row["rt0"]), str(row["sc0"]), str(row["rt1"]),
                          str(row["sc1"]), str(row["rt2"]), f"{row['gp']:g}", f"{row['rank']:g}")
        console.print(table)
        console.print(f"itx per round: {history.metrics.itx.tolist()} (itx_max = {itx_max(history.config.n_players)})\n")

        manifest.add_artifact(write_timeseries_csv(history, out / "table1.csv"))
        context = {
            "n_players": history.config.n_players,
            "k_factor": history.config.k_factor,
            "initial_rating": history.config.initial_rating,
            "rows": rows,
            "itx": history.metrics.itx.tolist(),
            "kld": history.metrics.kld.tolist(),
            "itx_max": itx_max(history.config.n_players),
        }
        manifest.add_artifact(TemplateEngine().render_to_file("table1.md", context, out / "table1.md"))

    _guard(verbose, lambda: _run_command("table1", verbose, body, config))


@main.command()
@common_options
@game_options
def timeseries(config_path, seed, output_dir, verbose, n_players, p_rand, k_factor, initial_rating,
               initial_spread, instances, discard):
    """Play one seeded series of round robins and record sc, rt and gp per instance"""
    overrides = {
        "rng_seed": seed, "output_dir": output_dir, "n_players": n_players, "p_rand": p_rand,
        "k_factor": k_factor, "initial_rating": initial_rating, "initial_spread": initial_spread,
        "n_instances": instances, "discard_transient": discard,
    }
    config = _load(config_path, overrides)

    def body(manifest: RunManifest):
        game = config.game_config()
        with Progress(SpinnerColumn(), TextColumn("[progress.description]{task.description}"), console=console) as progress:
            task = progress.add_task(f"Playing {game.n_instances} round robins...", total=None)
            history = run_time_series(game)
            progress.update(task, description="Series finished")

        metrics = history.metrics
        console.print(f"<itx> = {np.mean(metrics.itx):.4f}   <kld> = {np.mean(metrics.kld):.4f}   "
                      f"<crd(sc,rt)> = {np.mean(metrics.crd_sc_rt):.4f}   "
                      f"ptm(sc,rt) = {metrics.ptm_sc_rt:.4f}")
        console.print(f"final gp = {np.round(metrics.gp, 3).tolist()}\n")
        manifest.add_artifact(write_timeseries_csv(history, Path(config.get("output_dir")) / "timeseries.csv"))

    _guard(verbose, lambda: _run_command("timeseries", verbose, body, config))


@main.command()
@common_options
@click.option('--players', callback=_int_list, help='Comma-separated player counts, e.g. 8,16,24,32')
@click.option('--p-rand-levels', callback=_float_list, help='Comma-separated p_rand levels')
@click.option('--reps', type=int, help='Repetitions per cell')
@click.option('--instances', type=int, help='Round robins per repetition')
@click.option('--discard', type=int, help='Leading instances discarded as transient')
@click.option('--k-factor', type=float, help='Elo K-factor')
@click.option('--workers', type=int, help='Worker processes (results do not depend on it)')
@click.option('--fast', is_flag=True, help='Fast mode: 20 reps, 200 instances, 40 discarded')
def scatter(config_path, seed, output_dir, verbose, players, p_rand_levels, reps, instances, discard,
            k_factor, workers, fast):
    """Run the (N, p_rand) grid and write per-repetition, summary and per-player CSVs"""
    overrides = {
        "rng_seed": seed, "output_dir": output_dir, "grid_players": players, "grid_p_rand": p_rand_levels,
        "repetitions": reps, "scatter_instances": instances, "scatter_discard": discard,
        "k_factor": k_factor, "workers": workers,
    }
    config = _load(config_path, overrides, fast=fast)

    def body(manifest: RunManifest):
        total = len(config.get("grid_players")) * len(config.get("grid_p_rand")) * config.get("repetitions")
        with Progress(SpinnerColumn(), TextColumn("[progress.description]{task.description}"), BarColumn(),
                      TextColumn("{task.completed}/{task.total}"), console=console) as progress:
            task = progress.add_task("Running repetitions...", total=total)

            def progress_callback(current, _total, message):
                progress.update(task, completed=current, description=message)

            report = run_scatter(
                config.get("grid_players"),
                config.get("grid_p_rand"),
                reps=config.get("repetitions"),
                instances=config.get("scatter_instances"),
                discard=config.get("scatter_discard"),
                base_seed=config.get("rng_seed"),
                base_config=config.game_config(),
                workers=config.get("workers"),
                progress_callback=progress_callback,
            )

        table = Table(title=f"Cell means ({report.repetitions} reps, 99% CI)")
        for column in ("N", "p_rand", "<itx>/itx_max", "<kld>", "crd(sc,rt)", "crd(sc,gp)"):
            table.add_column(column, justify="right")
        for cell in report.cells:
            itx_mean, itx_lo, itx_hi = cell.summary["itx_norm"]
            table.add_row(str(cell.n_players), f"{cell.p_rand:g}", f"{itx_mean:.4f} ± {(itx_hi - itx_lo) / 2:.4f}",
                          f"{cell.summary['kld_avg'][0]:.4f}", f"{cell.summary['crd_sc_rt'][0]:.4f}",
                          f"{cell.summary['crd_sc_gp'][0]:.4f}")
        console.print(table)
        for path in write_scatter_csv(report, Path(config.get("output_dir")) / "scatter.csv"):
            manifest.add_artifact(path)

    _guard(verbose, lambda: _run_command("scatter", verbose, body, config))


@main.command()
@common_options
@click.option('--landscape', '-l', type=click.Choice(LandscapeFactory.get_available_landscapes(), case_sensitive=False),
              help='Objective landscape')
@click.option('--population-size', type=int, help='Population size |P|')
@click.option('--mu', type=int, help='Evaluator sample size')
@click.option('--include-self/--exclude-self', default=None, help='Whether a point may evaluate itself')
@click.option('--samples', type=int, help='Independent evaluator draws per point')
def substrate(config_path, seed, output_dir, verbose, landscape, population_size, mu, include_self, samples):
    """Evaluate number-game subjective fitness over a landscape and a random population"""
    overrides = {
        "rng_seed": seed, "output_dir": output_dir, "landscape": landscape, "population_size": population_size,
        "mu": mu, "include_self": include_self, "substrate_samples": samples,
    }
    config = _load(config_path, overrides)

    def body(manifest: RunManifest):
        rng = np.random.default_rng(config.get("rng_seed"))
        objective = LandscapeFactory.create(config.get("landscape"), config.config)
        population = Population.uniform(config.get("population_size"), objective, rng)
        records = evaluate_population(
            objective, population, config.get("mu"), rng,
            include_self=config.get("include_self"), samples=config.get("substrate_samples"),
        )
        gap = max(abs(r["f_sub_mean"] - r["f_sub_expected"]) for r in records)
        console.print(f"Landscape {objective.describe()}; max |mean f_sub - expected| = {gap:.4f}\n")
        manifest.add_artifact(write_rows(Path(config.get("output_dir")) / "substrate.csv", SUBSTRATE_COLUMNS, records))

    _guard(verbose, lambda: _run_command("substrate", verbose, body, config))


@main.command()
@common_options
@click.option('--input', '-i', 'input_path', required=True, help='CSV written by scatter or timeseries')
@click.option('--x', 'x_column', help='Column for the horizontal axis')
@click.option('--y', 'y_column', help='Column for the vertical axis')
@click.option('--group', default='p_rand', show_default=True, help='Column whose values get distinct markers')
@click.option('--output', help='SVG path (default: <output-dir>/<stem>_<y>_vs_<x>.svg)')
@click.option('--all-views', is_flag=True, help='Render every standard relationship view the CSV supports')
def plot(config_path, seed, output_dir, verbose, input_path, x_column, y_column, group, output, all_views):
    """Render CSV columns as a standalone SVG scatter plot"""
    if not all_views and not (x_column and y_column):
        raise click.UsageError("Provide --x and --y, or --all-views")
    config = _load(config_path, {"rng_seed": seed, "output_dir": output_dir})

    def body(manifest: RunManifest):
        table = read_csv_table(input_path)
        out = Path(config.get("output_dir"))
        stem = Path(input_path).stem
        if all_views:
            for path in emit_standard_views(table, out, stem):
                manifest.add_artifact(path)
            return
        target = Path(output) if output else out / f"{stem}_{y_column}_vs_{x_column}.svg"
        manifest.add_artifact(emit_svg_scatter(x_column, y_column, table, target, group_column=group))

    _guard(verbose, lambda: _run_command("plot", verbose, body, config))


if __name__ == '__main__':
    main()
