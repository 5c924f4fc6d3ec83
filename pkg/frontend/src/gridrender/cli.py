"""render: turn an emitted grid file into a heatmap or line image."""

from __future__ import annotations

import argparse
import sys

from .reader import GridFormatError
from .render import RenderSpec, dump_values, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="render", description="Render a grid CSV/JSON file as a PNG image"
    )
    parser.add_argument("--in", dest="input", required=True, help="grid CSV or JSON path")
    parser.add_argument("--out", dest="output", help="output image path")
    parser.add_argument("--log", action="store_true", help="log10-transform the values")
    parser.add_argument("--contours", help="comma-separated contour levels to overlay")
    parser.add_argument("--cmap", default="viridis", help="matplotlib colormap name")
    parser.add_argument(
        "--dump",
        action="store_true",
        help="print the parsed values (full precision) instead of rendering",
    )
    args = parser.parse_args(argv)

    try:
        if args.dump:
            sys.stdout.write(dump_values(args.input))
            return 0
        if not args.output:
            parser.error("--out is required unless --dump is given")
        contours = None
        if args.contours:
            try:
                contours = tuple(float(c) for c in args.contours.split(","))
            except ValueError:
                print(f"error: invalid contour list {args.contours!r}", file=sys.stderr)
                return 1
        spec = RenderSpec(
            input_path=args.input,
            output_path=args.output,
            colormap=args.cmap,
            log_scale=args.log,
            overlay_contours=contours,
        )
        render(spec)
        return 0
    except (GridFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
