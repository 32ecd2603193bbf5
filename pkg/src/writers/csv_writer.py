"""Byte-stable CSV output for histories and scatter reports"""

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Sequence

import numpy as np

from ..experiments.scatter import METRIC_COLUMNS, ScatterReport
from ..experiments.tournament import TournamentHistory

TIMESERIES_COLUMNS = ["k", "player", "sc", "rt", "gp", "rank_sc", "rank_rt", "rank_gp"]
SCATTER_COLUMNS = ["N", "p_rand", "rep"] + METRIC_COLUMNS
PLAYER_COLUMNS = ["N", "p_rand", "rep", "player", "itx_avg", "sc_avg", "rt_avg", "gp"]
SUMMARY_COLUMNS = ["N", "p_rand", "reps"] + [f"{m}_{part}" for m in METRIC_COLUMNS for part in ("mean", "lo", "hi")]


def format_value(value: Any) -> str:
    """Locale-free text for a CSV cell: integers plain, floats at full repr precision"""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        return repr(value)
    return str(value)


class StreamingCsvWriter:
    """
    Write rows to a CSV file as they are produced, LF line endings, fixed column order

    Rows go to a `.part` file next to the target; it is renamed into place on close and
    removed if the block raises, so a failed run leaves no truncated CSV behind.
    """

    def __init__(self, output_path, columns: Sequence[str]):
        self.output_path = Path(output_path)
        self.output_path.parent.mkdir(parents=True, exist_ok=True)
        self.partial_path = self.output_path.with_name(self.output_path.name + ".part")
        self.columns = list(columns)
        self.file = self.partial_path.open("w", encoding="utf-8", newline="")
        self.rows_written = 0
        self._write_line(self.columns)

    def _write_line(self, cells: Sequence[str]):
        self.file.write(",".join(cells) + "\n")

    def write_row(self, row: Dict[str, Any]):
        """Write a single row; every column must be present"""
        missing = [c for c in self.columns if c not in row]
        if missing:
            raise ValueError(f"Row is missing columns {missing} for {self.output_path.name}")
        self._write_line([format_value(row[c]) for c in self.columns])
        self.rows_written += 1

    def close(self):
        """Finish the file and move it to output_path"""
        self.file.close()
        self.partial_path.replace(self.output_path)

    def abort(self):
        """Drop everything written so far"""
        self.file.close()
        self.partial_path.unlink(missing_ok=True)

    def __enter__(self) -> "StreamingCsvWriter":
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc_type is None:
            self.close()
        else:
            self.abort()


def write_rows(path, columns: Sequence[str], rows: Sequence[Dict[str, Any]]) -> Path:
    with StreamingCsvWriter(path, columns) as writer:
        for row in rows:
            writer.write_row(row)
    return writer.output_path


def write_timeseries_csv(history: TournamentHistory, path) -> Path:
    """
    One row per (retained instance, player), instance-major

    `rt` is the rating after the instance at full precision; players are numbered from 1.
    """
    rank_sc, rank_rt, rank_gp = history.rank_sc, history.rank_rt, history.rank_gp
    post = history.post_ratings
    with StreamingCsvWriter(path, TIMESERIES_COLUMNS) as writer:
        for k in range(history.config.discard_transient, history.n_instances):
            for player in range(history.config.n_players):
                writer.write_row({
                    "k": k,
                    "player": player + 1,
                    "sc": history.scores[k, player],
                    "rt": post[k, player],
                    "gp": history.gp[k, player],
                    "rank_sc": rank_sc[k, player],
                    "rank_rt": rank_rt[k, player],
                    "rank_gp": rank_gp[k, player],
                })
    return writer.output_path


def companion_path(path, suffix: str) -> Path:
    path = Path(path)
    return path.with_name(f"{path.stem}{suffix}{path.suffix or '.csv'}")


def write_scatter_csv(report: ScatterReport, path) -> List[Path]:
    """
    Per-repetition rows, plus `_summary.csv` (per-cell means and CI bounds) and
    `_players.csv` (per-player time averages)

    Returns:
        Paths of the data, summary and players files
    """
    data_path = write_rows(path, SCATTER_COLUMNS, report.rows())

    summary_rows = []
    for cell in report.cells:
        row: Dict[str, Any] = {"N": cell.n_players, "p_rand": cell.p_rand, "reps": len(cell.rows)}
        for metric, (mean, lo, hi) in cell.summary.items():
            row.update({f"{metric}_mean": mean, f"{metric}_lo": lo, f"{metric}_hi": hi})
        summary_rows.append(row)
    summary_path = write_rows(companion_path(path, "_summary"), SUMMARY_COLUMNS, summary_rows)
    players_path = write_rows(companion_path(path, "_players"), PLAYER_COLUMNS, report.player_rows())
    return [data_path, summary_path, players_path]


@dataclass
class CsvTable:
    """A CSV file read back as named float columns"""

    columns: List[str]
    rows: List[Dict[str, float]]

    def values(self, column: str) -> List[float]:
        return [row[column] for row in self.rows]


def read_csv_table(path) -> CsvTable:
    """Load a numeric CSV written by this package"""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"CSV file not found: {path}")
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ValueError(f"CSV file is empty: {path}")
    columns = lines[0].split(",")
    rows = []
    for number, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        cells = line.split(",")
        if len(cells) != len(columns):
            raise ValueError(f"{path.name}:{number} has {len(cells)} cells, expected {len(columns)}")
        rows.append({c: float(v) for c, v in zip(columns, cells)})
    return CsvTable(columns, rows)
