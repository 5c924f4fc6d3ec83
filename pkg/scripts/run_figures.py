#!/usr/bin/env python3
"""Emit every built-in figure grid as CSV and JSON and print peak summaries.

Usage: python scripts/run_figures.py [--out-dir figures] [--jobs N]
The emitted files feed the standalone renderer (``render --in <grid> --out
<png>``) to produce the heatmap/line images.
"""

import argparse
import time
from pathlib import Path

import numpy as np

from entspec import FIGURE_NAMES, figure_preset, run_sweep, write_grid_csv, write_grid_json


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name in FIGURE_NAMES:
        start = time.perf_counter()
        grid = run_sweep(figure_preset(name), jobs=args.jobs)
        write_grid_csv(grid, out_dir / f"{name}.csv")
        write_grid_json(grid, out_dir / f"{name}.json")
        i, j = np.unravel_index(np.argmax(grid.values), grid.values.shape)
        print(
            f"{name}: {grid.values.shape[0]}x{grid.values.shape[1]} grid, "
            f"max {grid.values[i, j]:.6g} at "
            f"({grid.axis1_values[i]:.6g}, {grid.axis2_values[j]:.6g}), "
            f"{time.perf_counter() - start:.2f} s"
        )
    print(f"grids written to {out_dir}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
