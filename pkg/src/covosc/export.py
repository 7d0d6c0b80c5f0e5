"""CSV and JSON writers for tabulated results.

Floats are written with ``repr``, the shortest string that round-trips to the
same double, so identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, Sequence

FORMATS = ("csv", "json")


def _plain(value):
    if hasattr(value, "item"):  # numpy scalar
        return value.item()
    return value


def write_table(path, columns: Sequence[str], rows: Iterable[Sequence], fmt: str = "csv",
                metadata: dict | None = None) -> Path:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    path = Path(path)
    rows = [[_plain(v) for v in row] for row in rows]
    if fmt == "csv":
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(columns)
            writer.writerows(rows)
    else:
        doc = {"metadata": metadata or {}, "columns": list(columns), "rows": rows}
        path.write_text(json.dumps(doc, indent=1, allow_nan=False) + "\n")
    return path


def read_csv(path) -> tuple[list[str], list[list[float]]]:
    with Path(path).open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        return header, [[float(v) for v in row] for row in reader]
