"""Command-line interface: point evaluations, sweeps, figure presets, validation.

Exit codes: 0 on success, 1 on configuration errors, 2 on evaluation or
output errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import ConfigError, EvaluationError, QuadratureError
from .grids import write_grid_csv, write_grid_json
from .oracle import (
    QuadratureSpec,
    jsa_norm,
    pv_approx_error_report,
    pv_error_report_csv,
    pv_gaussian_exact,
    pv_quadrature,
)
from .photon_source import PhotonPairSource
from .sweep import FIGURE_NAMES, figure_preset, make_kernel, parse_config, run_sweep
from .vibronic import franck_condon_weights


def _read_config(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text)


def _write_grid(grid, path: str, fmt: str) -> None:
    if fmt == "json":
        write_grid_json(grid, path)
    else:
        write_grid_csv(grid, path)


def _cmd_point(args) -> int:
    cfg = _read_config(args.config)
    value = make_kernel(cfg)({})
    print(
        json.dumps(
            {
                "model": cfg.model,
                "observable": cfg.observable,
                "log10_output": cfg.log10_output,
                "value": value,
            }
        )
    )
    return 0


def _cmd_sweep(args) -> int:
    cfg = _read_config(args.config)
    grid = run_sweep(cfg, jobs=args.jobs)
    _write_grid(grid, args.out, args.format)
    return 0


def _cmd_figure(args) -> int:
    cfg = figure_preset(args.name)
    grid = run_sweep(cfg, jobs=args.jobs)
    _write_grid(grid, args.out, args.format)
    return 0


def _cmd_validate(args) -> int:
    del args
    ok = True
    spec = QuadratureSpec()

    for f in (0.1, 1.0, 5.0):
        total = sum(franck_condon_weights(f, 30))
        good = abs(total - 1.0) < 1e-12
        ok &= good
        print(f"{'ok' if good else 'FAIL'}: vibronic weight closure F={f}: sum={total!r}")

    rng = random.Random(20250811)
    worst = 0.0
    for _ in range(20):
        src = PhotonPairSource.from_fs_bandwidths(
            rng.uniform(1.0, 5.0),
            rng.uniform(1.0, 5.0),
            rng.uniform(0.01, 1.0),
            rng.uniform(0.01, 1.0),
        )
        worst = max(worst, abs(jsa_norm(src, spec) - 1.0))
    good = worst < 1e-9
    ok &= good
    print(f"{'ok' if good else 'FAIL'}: JSI normalisation on 20 sources: worst |err|={worst:.3e}")

    worst = 0.0
    for _ in range(50):
        sigma = rng.uniform(0.05, 0.5)
        center = rng.uniform(-1.0, 1.0)
        offset = rng.choice([-1.0, 1.0]) * rng.uniform(0.2, 2.5) * sigma
        exact = pv_gaussian_exact(center, center + offset, sigma)
        quad = pv_quadrature(center, center + offset, sigma, spec)
        worst = max(worst, abs(quad - exact) / abs(exact))
    good = worst < 1e-8
    ok &= good
    print(f"{'ok' if good else 'FAIL'}: PV cross-oracle on 50 draws: worst rel err={worst:.3e}")

    print()
    print(pv_error_report_csv(pv_approx_error_report(1.0, [0.0, 0.5, 1.0, 2.0])), end="")
    return 0 if ok else 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entspec",
        description=(
            "Entangled two-photon absorption vs. stimulated Raman scattering: "
            "closed-form signal evaluation and parameter sweeps"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="evaluate the observable once, print JSON")
    p.add_argument("--config", required=True, help="JSON config path")
    p.set_defaults(func=_cmd_point)

    p = sub.add_parser("sweep", help="run a configured sweep and write the grid")
    p.add_argument("--config", required=True, help="JSON config path")
    p.add_argument("--out", required=True, help="output grid path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1, help="row-parallel workers")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("figure", help="run a built-in figure preset")
    p.add_argument("name", choices=FIGURE_NAMES)
    p.add_argument("--out", required=True, help="output grid path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1, help="row-parallel workers")
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("validate", help="run the oracle suite, print the PV error report")
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (EvaluationError, QuadratureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
