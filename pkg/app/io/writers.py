"""
CSV and JSON artifact writers.

CSV files are UTF-8 and comma separated. Floats are written in scientific
notation with 12 significant digits. The file starts with `# key: value`
metadata lines and one header row.
"""
from __future__ import annotations

import csv
import io
import logging
import math
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional

from pydantic import BaseModel

from app.constants import CSV_SIGNIFICANT_DIGITS
from app.errors import DomainError, OutputError

logger = logging.getLogger(__name__)


class Artifact(BaseModel):
    """JSON artifact: run metadata plus a payload."""
    metadata: Dict[str, Any]
    data: Any


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return f"{value:.{CSV_SIGNIFICANT_DIGITS - 1}e}"
    return str(value)


def render_csv(rows: Iterable[Mapping[str, Any]], columns: List[str],
               metadata: Optional[Mapping[str, Any]] = None) -> str:
    """CSV text for `rows` with the column order fixed by `columns`."""
    if not columns:
        raise DomainError("ERROR: a CSV schema needs at least one column")
    lines = [f"# {key}: {value}" for key, value in (metadata or {}).items()]

    sink = io.StringIO()
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        missing = [c for c in columns if c not in row]
        if missing:
            raise DomainError(f"ERROR: row is missing columns {missing}")
        writer.writerow([format_value(row[c]) for c in columns])
    body = sink.getvalue()
    return ("\n".join(lines) + "\n" if lines else "") + body


def emit_csv(rows: Iterable[Mapping[str, Any]], columns: List[str], path: Path,
             metadata: Optional[Mapping[str, Any]] = None) -> Path:
    """Write rows to `path` (parent directories are created)."""
    text = render_csv(rows, columns, metadata)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"ERROR: cannot write {path}: {exc}") from exc
    logger.info(f"wrote {path}")
    return path


def emit_json(data: Any, path: Path, metadata: Optional[Mapping[str, Any]] = None) -> Path:
    """Write a JSON artifact; pydantic models in `data` are dumped by field."""
    artifact = Artifact(metadata=dict(metadata or {}), data=data)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(artifact.model_dump_json(indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"ERROR: cannot write {path}: {exc}") from exc
    logger.info(f"wrote {path}")
    return path
