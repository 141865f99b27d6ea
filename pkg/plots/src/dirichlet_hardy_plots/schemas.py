"""Documented CSV schemas of the scan commands this package renders.

These mirror the producing command's fixed header rows; a file whose header
is missing any required column is rejected with an error naming the first
missing column.
"""

from __future__ import annotations

import csv
from pathlib import Path

SCHEMAS = {
    "slope_fit": ["p", "beta", "N", "pairing", "norm", "ratio",
                  "log_ratio", "loglogN", "slope", "intercept"],
    "phase_grid": ["p", "beta", "n_max", "label", "majorant_decay",
                   "minorant_trend", "minorant_decay"],
    "growth_curve": ["mode", "p", "k", "n", "log_c_lower", "log_c_upper",
                     "statistic_lower", "statistic_upper"],
}


class SchemaError(ValueError):
    """Input table does not match the documented schema."""


def read_rows(path: str | Path, kind: str) -> list[dict]:
    """Parse the CSV and validate it against the schema for ``kind``."""
    if kind not in SCHEMAS:
        raise SchemaError(f"unknown plot kind {kind!r}; expected one of "
                          f"{sorted(SCHEMAS)}")
    required = SCHEMAS[kind]
    with open(path, newline="") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        for column in required:
            if column not in header:
                raise SchemaError(
                    f"{path}: missing required column {column!r} for "
                    f"{kind} (header: {','.join(header) or '<empty>'})")
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows
