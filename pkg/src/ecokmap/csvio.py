"""CSV emission and re-reading.

Floats are written with 17 significant digits so that re-reading
reproduces every value exactly; rows use '\n' regardless of platform so
output bytes are identical across runs and machines.
"""
from __future__ import annotations

import csv
import io
from pathlib import Path

__all__ = ["format_value", "render_csv", "write_csv", "read_csv"]


def format_value(v) -> str:
    if isinstance(v, bool):
        raise TypeError("bool is not a CSV value here")
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, int):
        return str(v)
    return str(v)


def render_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_value(v) for v in row])
    return buf.getvalue()


def write_csv(path, header: list[str], rows) -> None:
    Path(path).write_text(render_csv(header, rows), encoding="ascii")


def read_csv(path) -> tuple[list[str], list[list[str]]]:
    """Header plus data rows, as strings; callers parse fields themselves."""
    with open(path, newline="", encoding="ascii") as f:
        r = csv.reader(f)
        header = next(r)
        return header, [row for row in r]
