"""
Serialization helpers for lab reports.

This module turns report models into flat rows with fixed headers, and
rows into CSV or JSON text.
"""

import csv
import io
import json
from typing import Any, Dict, List, Sequence, Tuple

from dedekind_lab.core import format_rational
from dedekind_lab.lab.models import BenchRecord, CensusRow, LevelSetTable, TheoremReport

THM1_HEADER = ["b", "a1", "a2", "s1", "s2", "sums_equal", "divisible", "verdict"]
THM3_HEADER = ["n"] + THM1_HEADER
CENSUS_HEADER = ["b", "r", "phi", "num_classes", "min_class", "max_class"]
LEVELS_HEADER = ["b", "value", "size", "members"]
BENCH_HEADER = ["method", "b_bits", "trials", "mean_time_ns", "checksum", "skipped"]
FIXTURE_HEADER = ["fixture", "holds"]

Rows = Tuple[List[str], List[Dict[str, Any]]]


def report_rows(reports: Sequence[TheoremReport], with_n: bool = False) -> Rows:
    """
    Flatten theorem reports.

    Args:
        reports: Reports to flatten, emitted sorted by (n, b, a1, a2)
        with_n: Include the shift column (Dedekind-Rademacher scans)

    Returns:
        Header and rows
    """
    rows = []
    for report in sorted(reports, key=lambda r: (r.n or 0, r.b, r.a1, r.a2)):
        data = report.model_dump(mode="json")
        row = {
            "b": data["b"],
            "a1": data["a1"],
            "a2": data["a2"],
            "s1": data["s1"],
            "s2": data["s2"],
            "sums_equal": data["sums_equal"],
            "divisible": data["divisibility_holds"],
            "verdict": data["verdict"],
        }
        if with_n:
            row = {"n": data["n"], **row}
        rows.append(row)
    return (THM3_HEADER if with_n else THM1_HEADER), rows


def census_rows(rows: Sequence[CensusRow]) -> Rows:
    return CENSUS_HEADER, [
        {
            "b": row.b,
            "r": row.r,
            "phi": row.unit_count,
            "num_classes": row.num_classes,
            "min_class": row.min_class_size,
            "max_class": row.max_class_size,
        }
        for row in rows
    ]


def level_rows(table: LevelSetTable) -> Rows:
    return LEVELS_HEADER, [
        {
            "b": table.b,
            "value": format_rational(value),
            "size": len(members),
            "members": " ".join(str(a) for a in members),
        }
        for value, members in table.entries.items()
    ]


def bench_rows(records: Sequence[BenchRecord]) -> Rows:
    rows = []
    for record in records:
        data = record.model_dump(mode="json")
        rows.append({name: data[name] for name in BENCH_HEADER})
    return BENCH_HEADER, rows


def fixture_rows(fixtures: Sequence[Tuple[str, bool]]) -> Rows:
    return FIXTURE_HEADER, [{"fixture": name, "holds": holds} for name, holds in fixtures]


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def rows_to_csv(header: List[str], rows: List[Dict[str, Any]]) -> str:
    """Render rows as CSV with the given header and "\\n" line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(row[name]) for name in header])
    return buffer.getvalue()


def serialize_to_json(data: Any) -> str:
    """
    Serialize data to JSON.

    Args:
        data: Data to serialize

    Returns:
        JSON string
    """
    return json.dumps(data, indent=2, sort_keys=True)
