"""Standalone SVG scatter plots of CSV columns"""

import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ..errors import UsageError
from ..template_engine import TemplateEngine
from .csv_writer import CsvTable

WIDTH, HEIGHT = 640, 480
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 72, 150, 40, 60
N_TICKS = 5
MARKER_SIZE = 4.0

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"]
SHAPES = ["circle", "square", "triangle", "diamond", "cross"]

# Relationship views from a scatter CSV, then from its _players.csv companion
STANDARD_VIEWS = [
    ("itx_norm", "kld_avg"),
    ("itx_norm", "ptm_sc_rt"),
    ("itx_norm", "ptm_sc_gp"),
    ("itx_avg", "crd_sc_gp"),
    ("max_sc", "crd_sc_gp"),
    ("max_gp", "crd_sc_gp"),
    ("itx_norm", "crd_sc_gp"),
    ("crd_sc_rt", "crd_sc_gp"),
    ("ptm_sc_gp", "crd_sc_gp"),
]
PLAYER_VIEWS = [("sc_avg", "itx_avg"), ("rt_avg", "itx_avg"), ("gp", "itx_avg")]


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _axis_range(values: List[float]) -> Tuple[float, float]:
    if not values:
        return 0.0, 1.0
    lo, hi = min(values), max(values)
    if lo == hi:
        pad = abs(lo) * 0.05 or 0.5
        return lo - pad, hi + pad
    pad = (hi - lo) * 0.05
    return lo - pad, hi + pad


def _marker(shape: str, x: float, y: float) -> Dict[str, str]:
    s = MARKER_SIZE
    if shape == "circle":
        return {"kind": "circle", "cx": _fmt(x), "cy": _fmt(y), "r": _fmt(s)}
    if shape == "square":
        return {"kind": "rect", "x": _fmt(x - s), "y": _fmt(y - s), "size": _fmt(2 * s)}
    if shape == "triangle":
        corners = [(x, y - s), (x + s, y + s), (x - s, y + s)]
    elif shape == "diamond":
        corners = [(x, y - s), (x + s, y), (x, y + s), (x - s, y)]
    else:
        return {"kind": "cross", "d": f"M{_fmt(x - s)},{_fmt(y - s)}L{_fmt(x + s)},{_fmt(y + s)}"
                                      f"M{_fmt(x - s)},{_fmt(y + s)}L{_fmt(x + s)},{_fmt(y - s)}"}
    return {"kind": "polygon", "points": " ".join(f"{_fmt(cx)},{_fmt(cy)}" for cx, cy in corners)}


def build_scatter_context(
    x_column: str,
    y_column: str,
    table: CsvTable,
    group_column: Optional[str] = "p_rand",
    title: Optional[str] = None,
) -> Dict[str, Any]:
    """Pixel geometry of a scatter plot; identical input gives identical output"""
    for column in (x_column, y_column):
        if column not in table.columns:
            raise UsageError(f"Unknown column '{column}'. Available: {', '.join(table.columns)}")
    if group_column not in table.columns:
        group_column = None

    # Undefined measurements (nan) are left out of the plot.
    rows = [r for r in table.rows if math.isfinite(r[x_column]) and math.isfinite(r[y_column])]
    x_lo, x_hi = _axis_range([r[x_column] for r in rows])
    y_lo, y_hi = _axis_range([r[y_column] for r in rows])
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(x: float) -> float:
        return MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return MARGIN_TOP + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h

    group_values = sorted({row[group_column] for row in rows}) if group_column else []
    style = {g: (SHAPES[i % len(SHAPES)], PALETTE[i % len(PALETTE)]) for i, g in enumerate(group_values)}

    points = []
    for row in rows:
        shape, color = style[row[group_column]] if group_column else (SHAPES[0], PALETTE[0])
        points.append({**_marker(shape, px(row[x_column]), py(row[y_column])), "color": color})

    legend = []
    for i, g in enumerate(group_values):
        shape, color = style[g]
        y = MARGIN_TOP + 10 + i * 18
        legend.append({
            "marker": {**_marker(shape, WIDTH - MARGIN_RIGHT + 20, y), "color": color},
            "label_x": WIDTH - MARGIN_RIGHT + 32,
            "label_y": _fmt(y + 4),
            "label": f"{group_column} = {g:g}",
        })

    x_ticks = [x_lo + (x_hi - x_lo) * i / (N_TICKS - 1) for i in range(N_TICKS)]
    y_ticks = [y_lo + (y_hi - y_lo) * i / (N_TICKS - 1) for i in range(N_TICKS)]
    return {
        "width": WIDTH,
        "height": HEIGHT,
        "title": title or f"{y_column} vs {x_column}",
        "x_label": x_column,
        "y_label": y_column,
        "left": MARGIN_LEFT,
        "right": WIDTH - MARGIN_RIGHT,
        "top": MARGIN_TOP,
        "bottom": HEIGHT - MARGIN_BOTTOM,
        "x_ticks": [{"pos": _fmt(px(t)), "label": f"{t:.3g}"} for t in x_ticks],
        "y_ticks": [{"pos": _fmt(py(t)), "label": f"{t:.3g}"} for t in y_ticks],
        "points": points,
        "legend": legend,
    }


def emit_svg_scatter(
    x_column: str,
    y_column: str,
    table: CsvTable,
    path,
    group_column: Optional[str] = "p_rand",
    title: Optional[str] = None,
    engine: Optional[TemplateEngine] = None,
) -> Path:
    """
    Render a scatter of two CSV columns, styled per `group_column` value, with a legend

    Raises:
        UsageError: x_column or y_column is not a column of the table
    """
    context = build_scatter_context(x_column, y_column, table, group_column, title)
    return (engine or TemplateEngine()).render_to_file("scatter.svg", context, path)


def emit_standard_views(table: CsvTable, output_dir, stem: str, engine: Optional[TemplateEngine] = None) -> List[Path]:
    """Every relationship view whose columns the table has"""
    engine = engine or TemplateEngine()
    output_dir = Path(output_dir)
    written = []
    for x_column, y_column in STANDARD_VIEWS + PLAYER_VIEWS:
        if x_column in table.columns and y_column in table.columns:
            path = output_dir / f"{stem}_{y_column}_vs_{x_column}.svg"
            written.append(emit_svg_scatter(x_column, y_column, table, path, engine=engine))
    return written
