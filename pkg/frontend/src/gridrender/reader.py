"""Parse serialized grid files (CSV or JSON) without touching the producer.

The CSV layout: ``# key=value`` metadata lines (including axis labels and
counts), an ``axis1,axis2,value`` header, then one row per point in
row-major order.  The JSON layout mirrors the same fields in one document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class GridFormatError(ValueError):
    """The input file is not a well-formed grid."""


@dataclass
class GridData:
    axis1_label: str
    axis2_label: str
    axis1: np.ndarray
    axis2: np.ndarray
    values: np.ndarray  # shape (len(axis1), len(axis2))
    metadata: dict = field(default_factory=dict)


def _finish(label1, label2, axis1, axis2, values, meta, path) -> GridData:
    axis1 = np.asarray(axis1, dtype=float)
    axis2 = np.asarray(axis2, dtype=float)
    values = np.asarray(values, dtype=float)
    if axis1.size == 0 or axis2.size == 0 or values.size == 0:
        raise GridFormatError(f"{path}: empty grid")
    if values.shape != (axis1.size, axis2.size):
        raise GridFormatError(
            f"{path}: value shape {values.shape} does not match axes "
            f"({axis1.size}, {axis2.size})"
        )
    return GridData(label1, label2, axis1, axis2, values, meta)


def parse_grid_csv(path) -> GridData:
    meta: dict = {}
    triples: list[tuple[float, float, float]] = []
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GridFormatError(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key] = value
            continue
        if line == "axis1,axis2,value":
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise GridFormatError(f"{path}:{lineno}: expected 3 columns, got {len(parts)}")
        try:
            triples.append((float(parts[0]), float(parts[1]), float(parts[2])))
        except ValueError as exc:
            raise GridFormatError(f"{path}:{lineno}: {exc}") from exc
    if not triples:
        raise GridFormatError(f"{path}: no data rows")
    try:
        n1 = int(meta["axis1_count"])
        n2 = int(meta["axis2_count"])
    except (KeyError, ValueError) as exc:
        raise GridFormatError(f"{path}: missing or invalid axis count metadata") from exc
    if len(triples) != n1 * n2:
        raise GridFormatError(f"{path}: expected {n1 * n2} rows, found {len(triples)}")
    axis1 = [triples[i * n2][0] for i in range(n1)]
    axis2 = [triples[j][1] for j in range(n2)]
    values = np.array([t[2] for t in triples]).reshape(n1, n2)
    return _finish(
        meta.pop("axis1_label", "axis1"),
        meta.pop("axis2_label", "axis2"),
        axis1,
        axis2,
        values,
        meta,
        path,
    )


def parse_grid_json(path) -> GridData:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise GridFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GridFormatError(f"{path}: invalid JSON: {exc}") from exc
    try:
        axis1 = doc["axis1_values"]
        axis2 = doc["axis2_values"]
        values = np.asarray(doc["values"], dtype=float).reshape(len(axis1), len(axis2))
    except (KeyError, TypeError, ValueError) as exc:
        raise GridFormatError(f"{path}: not a grid document: {exc}") from exc
    return _finish(
        doc.get("axis1_label", "axis1"),
        doc.get("axis2_label", "axis2"),
        axis1,
        axis2,
        values,
        doc.get("metadata", {}),
        path,
    )


def load_grid(path) -> GridData:
    """Load a grid file, dispatching on the extension (.json vs CSV)."""
    if str(path).endswith(".json"):
        return parse_grid_json(path)
    return parse_grid_csv(path)
