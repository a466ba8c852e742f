"""Deterministic table rendering: markdown, RFC 4180 CSV, JSON."""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence


def markdown_table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = ["| " + " | ".join(str(h) for h in headers) + " |"]
    lines.append("|" + "|".join(" --- " for _ in headers) + "|")
    for row in rows:
        lines.append("| " + " | ".join(str(c) for c in row) + " |")
    return "\n".join(lines)


def csv_table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(headers)
    for row in rows:
        writer.writerow(list(row))
    return buf.getvalue()


def json_payload(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def compact_distribution(hist: Sequence[int]) -> str:
    """Nonzero weight counts as "w:count" pairs, space separated."""
    return " ".join(f"{w}:{c}" for w, c in enumerate(hist) if c)
