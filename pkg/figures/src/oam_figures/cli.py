"""Command line entry point: render --style <style> --in <csv> --out <png|svg>."""

from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render a figure from an oam-mzi CSV export.",
    )
    parser.add_argument(
        "--style",
        required=True,
        choices=["vector_field", "duality_curves"],
        help="figure style matching the input CSV layout",
    )
    parser.add_argument("--in", dest="input_path", required=True,
                        help="input CSV (schema=1)")
    parser.add_argument("--out", dest="output_path", required=True,
                        help="output image path (.png or .svg)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(args.input_path, args.style, args.output_path)
    try:
        render(spec)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(spec.output_path)
    return 0


def entry() -> None:
    sys.exit(main())
