"""Labeled 2-D result grids and their CSV/JSON serialisation.

The CSV layout is: '#'-prefixed ``key=value`` metadata lines (one per line,
sorted by key, including a hash of the canonicalised configuration), a
``axis1,axis2,value`` header, then one row per grid point in row-major order
(axis1 = rows).  Numbers are written with full round-trip precision so a
re-parse reproduces the values bit-exactly.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

import numpy as np


def canonical_json(obj) -> str:
    """Deterministic JSON encoding (sorted keys, compact separators)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def config_hash(obj) -> str:
    """SHA-256 over the canonicalised configuration snapshot."""
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


def _fmt(x: float) -> str:
    # repr of a Python float is the shortest digit string that round-trips
    return repr(float(x))


@dataclass
class Grid:
    """A labeled 2-D array of signal values with axis metadata."""

    axis1_label: str
    axis2_label: str
    axis1_values: np.ndarray
    axis2_values: np.ndarray
    values: np.ndarray  # shape (len(axis1_values), len(axis2_values))
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.axis1_values = np.asarray(self.axis1_values, dtype=float)
        self.axis2_values = np.asarray(self.axis2_values, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        shape = (self.axis1_values.size, self.axis2_values.size)
        if self.values.shape != shape:
            raise ValueError(
                f"values shape {self.values.shape} does not match axes {shape}"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("grid contains non-finite values")


def _metadata_lines(grid: Grid) -> list[str]:
    items = {
        "axis1_label": grid.axis1_label,
        "axis2_label": grid.axis2_label,
        "axis1_count": str(grid.axis1_values.size),
        "axis2_count": str(grid.axis2_values.size),
    }
    meta = dict(grid.metadata)
    if "config" in meta and "config_hash" not in meta:
        meta["config_hash"] = config_hash(meta["config"])
    elif "config_hash" not in meta:
        meta["config_hash"] = config_hash(meta)
    for k, v in meta.items():
        text = v if isinstance(v, str) else canonical_json(v)
        if "\n" in text:
            raise ValueError(f"metadata value for {k!r} may not contain newlines")
        items[str(k)] = text
    return [f"# {k}={items[k]}" for k in sorted(items)]


def write_grid_csv(grid: Grid, path) -> None:
    lines = _metadata_lines(grid)
    lines.append("axis1,axis2,value")
    for i, a in enumerate(grid.axis1_values):
        for j, b in enumerate(grid.axis2_values):
            lines.append(f"{_fmt(a)},{_fmt(b)},{_fmt(grid.values[i, j])}")
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write grid to {path}: {exc}") from exc


def write_grid_json(grid: Grid, path) -> None:
    meta = dict(grid.metadata)
    if "config" in meta and "config_hash" not in meta:
        meta["config_hash"] = config_hash(meta["config"])
    elif "config_hash" not in meta:
        meta["config_hash"] = config_hash(meta)
    doc = {
        "axis1_label": grid.axis1_label,
        "axis2_label": grid.axis2_label,
        "axis1_values": [float(v) for v in grid.axis1_values],
        "axis2_values": [float(v) for v in grid.axis2_values],
        "values": [float(v) for v in grid.values.ravel(order="C")],
        "metadata": meta,
    }
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
            fh.write("\n")
    except OSError as exc:
        raise OSError(f"cannot write grid to {path}: {exc}") from exc


def read_grid_csv(path) -> Grid:
    meta: dict = {}
    triples: list[tuple[float, float, float]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip():
                continue
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                meta[key] = value
            elif line == "axis1,axis2,value":
                continue
            else:
                a, b, v = line.split(",")
                triples.append((float(a), float(b), float(v)))
    if not triples:
        raise ValueError(f"{path}: no data rows")
    n1 = int(meta.pop("axis1_count"))
    n2 = int(meta.pop("axis2_count"))
    if len(triples) != n1 * n2:
        raise ValueError(f"{path}: expected {n1 * n2} rows, found {len(triples)}")
    axis1 = np.array([triples[i * n2][0] for i in range(n1)])
    axis2 = np.array([triples[j][1] for j in range(n2)])
    values = np.array([t[2] for t in triples]).reshape(n1, n2)
    label1 = meta.pop("axis1_label", "axis1")
    label2 = meta.pop("axis2_label", "axis2")
    if "config" in meta:
        try:
            meta["config"] = json.loads(meta["config"])
        except json.JSONDecodeError:
            pass
    return Grid(label1, label2, axis1, axis2, values, metadata=meta)


def read_grid_json(path) -> Grid:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    axis1 = np.asarray(doc["axis1_values"], dtype=float)
    axis2 = np.asarray(doc["axis2_values"], dtype=float)
    values = np.asarray(doc["values"], dtype=float).reshape(axis1.size, axis2.size)
    return Grid(
        doc["axis1_label"],
        doc["axis2_label"],
        axis1,
        axis2,
        values,
        metadata=doc.get("metadata", {}),
    )
