"""CSV emission for sweep and figure data."""

import csv
import io
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TextIO

from oamparity.observability.logging import get_logger

_logger = get_logger(__name__)

SIGNIFICANT_DIGITS = 12


def format_value(value: float | int) -> str:
    """Twelve significant digits; unbounded values print as ``inf``."""
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return f"{float(value):.{SIGNIFICANT_DIGITS}g}"


def _write(handle: TextIO, columns: Sequence[str], rows: Iterable[Sequence[float | int]]) -> int:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(columns)
    count = 0
    for row in rows:
        if len(row) != len(columns):
            raise ValueError(f"row has {len(row)} values for {len(columns)} columns")
        writer.writerow([format_value(value) for value in row])
        count += 1
    return count


def render_csv(columns: Sequence[str], rows: Iterable[Sequence[float | int]]) -> str:
    """Return the CSV text: header row, then one line per row, LF endings."""
    buffer = io.StringIO()
    _write(buffer, columns, rows)
    return buffer.getvalue()


def write_csv(path: Path, columns: Sequence[str], rows: Iterable[Sequence[float | int]]) -> Path:
    """Write a CSV file, creating parent directories as needed."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        count = _write(handle, columns, rows)
    _logger.debug("csv_written", path=str(path), rows=count)
    return path

