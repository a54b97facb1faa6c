"""Machine-readable report assembly: versioned JSON schema and a flat CSV
projection.  Reports are byte-identical across runs for the same inputs:
no timestamps, sorted keys, floats fixed at 12 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import zdgecc

SCHEMA_VERSION = 1


def fmt_float(x: float) -> str:
    return "%.12g" % float(x)


def fmt_value(v) -> str:
    if isinstance(v, (int, Fraction)):
        return str(v)
    return fmt_float(v)


def spectrum_json(spec) -> list[dict]:
    out = []
    for e in spec.entries:
        item = {
            "value": e.value_text(),
            "exact": e.exact,
            "multiplicity": e.multiplicity,
        }
        if not e.exact and e.tol is not None:
            item["cluster_tol"] = fmt_float(e.tol)
        out.append(item)
    return out


def envelope(command: str, items: list[dict]) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "tool": {"name": "zdgecc", "version": zdgecc.__version__},
        "command": command,
        "items": items,
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _flatten(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def to_csv(items: list[dict]) -> str:
    """Lossy flat projection: one row per item, union of keys as columns."""
    columns: list[str] = []
    for item in items:
        for key in item:
            if key not in columns:
                columns.append(key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for item in items:
        writer.writerow([_flatten(item.get(c)) for c in columns])
    return buf.getvalue()
