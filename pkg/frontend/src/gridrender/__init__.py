"""Standalone renderer for entspec grid files."""

from .reader import GridData, GridFormatError, load_grid, parse_grid_csv, parse_grid_json
from .render import RenderSpec, dump_values, render, render_heatmap, render_line

__version__ = "0.1.0"

__all__ = [
    "GridData",
    "GridFormatError",
    "RenderSpec",
    "dump_values",
    "load_grid",
    "parse_grid_csv",
    "parse_grid_json",
    "render",
    "render_heatmap",
    "render_line",
]
