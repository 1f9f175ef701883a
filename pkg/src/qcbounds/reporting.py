"""Delimited table output: RFC-4180-style CSV and JSON arrays.

Floating-point values are rendered at 12 significant digits in both
formats, so identical inputs always serialize to identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict

from .experiment import ExperimentRecord

SIG_DIGITS = 12

TRACE_FIELDS = [
    "theta",
    "xi_upper",
    "xi_lower",
    "bound_upper",
    "bound_lower",
    "chsh_ideal",
    "chsh_est",
    "chsh_err",
    "ch_ideal",
    "ch_est",
    "ch_err",
    "epsilon",
]
ANALYTIC_FIELDS = [f for f in TRACE_FIELDS if f not in ("chsh_est", "chsh_err", "ch_est", "ch_err")]


def normalize_float(value: float) -> float:
    """Round to 12 significant digits (and fold -0.0 into 0.0)."""
    rounded = float(format(value, f".{SIG_DIGITS}g"))
    return 0.0 if rounded == 0.0 else rounded


def _render_cell(value):
    if isinstance(value, float):
        return format(normalize_float(value), f".{SIG_DIGITS}g")
    return value


def render_csv(fieldnames: list[str], rows: list[dict]) -> str:
    """CSV text with a header row, CRLF line endings, comma separators."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames)
    writer.writeheader()
    for row in rows:
        writer.writerow({name: _render_cell(row[name]) for name in fieldnames})
    return buf.getvalue()


def render_json(fieldnames: list[str], rows: list[dict]) -> str:
    """JSON array of flat objects with the same fields as the CSV columns."""
    out = []
    for row in rows:
        obj = {}
        for name in fieldnames:
            value = row[name]
            obj[name] = normalize_float(value) if isinstance(value, float) else value
        out.append(obj)
    return json.dumps(out, indent=2) + "\n"


def record_row(record: ExperimentRecord) -> dict:
    """An experiment record as a plain field -> value mapping."""
    return asdict(record)
