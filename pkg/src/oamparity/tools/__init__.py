"""Output helpers."""

from oamparity.tools.csv_tools import format_value, render_csv, write_csv

__all__ = [
    "format_value",
    "render_csv",
    "write_csv",
]
