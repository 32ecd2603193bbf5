"""CSV, SVG and manifest output"""

from .csv_writer import (
    CsvTable,
    StreamingCsvWriter,
    read_csv_table,
    write_rows,
    write_scatter_csv,
    write_timeseries_csv,
)
from .manifest import RunManifest, write_manifest
from .svg_writer import emit_standard_views, emit_svg_scatter

__all__ = [
    "CsvTable",
    "RunManifest",
    "StreamingCsvWriter",
    "emit_standard_views",
    "emit_svg_scatter",
    "read_csv_table",
    "write_manifest",
    "write_rows",
    "write_scatter_csv",
    "write_timeseries_csv",
]
