"""Heatmap and line rendering for grid files.

Grids with a single-valued second axis render as a line plot, everything
else as a heatmap with optional contour overlays.  Rendering never alters
the numbers: a dump mode re-emits the parsed values bit-identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .reader import GridData, GridFormatError, load_grid


@dataclass(frozen=True)
class RenderSpec:
    input_path: str
    output_path: str
    colormap: str = "viridis"
    log_scale: bool = False
    overlay_contours: tuple[float, ...] | None = None


def _prepared_values(grid: GridData, log_scale: bool) -> np.ndarray:
    values = grid.values
    if log_scale:
        if np.any(values <= 0.0):
            raise GridFormatError(
                "log scale requested but the grid contains non-positive values"
            )
        values = np.log10(values)
    return values


def render_heatmap(spec: RenderSpec) -> Path:
    grid = load_grid(spec.input_path)
    if grid.axis2.size < 2:
        raise GridFormatError("heatmap needs a 2-D grid; use the line renderer")
    values = _prepared_values(grid, spec.log_scale)
    fig, ax = plt.subplots(figsize=(6.0, 4.8), constrained_layout=True)
    # axis1 runs along x, so the value matrix is transposed for pcolormesh
    mesh = ax.pcolormesh(grid.axis1, grid.axis2, values.T, cmap=spec.colormap, shading="nearest")
    fig.colorbar(mesh, ax=ax)
    if spec.overlay_contours:
        lo, hi = float(values.min()), float(values.max())
        levels = sorted(c for c in spec.overlay_contours if lo < c < hi)
        if levels:
            ax.contour(grid.axis1, grid.axis2, values.T, levels=levels, colors="black")
    ax.set_xlabel(grid.axis1_label)
    ax.set_ylabel(grid.axis2_label)
    out = Path(spec.output_path)
    fig.savefig(out)
    plt.close(fig)
    return out


def render_line(spec: RenderSpec) -> Path:
    grid = load_grid(spec.input_path)
    if grid.axis2.size != 1:
        raise GridFormatError("line rendering needs a single-valued second axis")
    values = _prepared_values(grid, spec.log_scale)
    fig, ax = plt.subplots(figsize=(6.0, 4.2), constrained_layout=True)
    ax.plot(grid.axis1, values[:, 0], marker="." if grid.axis1.size <= 40 else None)
    ax.set_xlabel(grid.axis1_label)
    ax.set_ylabel("value" if not spec.log_scale else "log10(value)")
    ax.grid(True, alpha=0.3)
    out = Path(spec.output_path)
    fig.savefig(out)
    plt.close(fig)
    return out


def render(spec: RenderSpec) -> Path:
    """Render a grid file, dispatching on its shape."""
    grid = load_grid(spec.input_path)
    if grid.axis2.size == 1:
        return render_line(spec)
    return render_heatmap(spec)


def dump_values(path) -> str:
    """Re-emit the parsed values, one full-precision number per line."""
    grid = load_grid(path)
    return "\n".join(repr(float(v)) for v in grid.values.ravel(order="C")) + "\n"
