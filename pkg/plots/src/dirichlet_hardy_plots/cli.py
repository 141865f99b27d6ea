"""Command-line entry: render one scan CSV into a figure plus sidecar."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import KINDS, PlotJob, render
from .schemas import SchemaError

KIND_BY_COMMAND = {"slope-fit": "slope_fit", "phase-grid": "phase_grid",
                   "growth-curve": "growth_curve"}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="dhardy-plots",
        description="Render dirichlet-hardy scan CSVs as figures; every "
                    "number on a figure also lands in a JSON sidecar next "
                    "to the image.")
    parser.add_argument("kind", choices=sorted(KIND_BY_COMMAND))
    parser.add_argument("input", help="scan CSV produced by dhardy")
    parser.add_argument("--output", required=True,
                        help="image path (the sidecar swaps in .json)")
    args = parser.parse_args(argv)
    job = PlotJob(input_csv=args.input, kind=KIND_BY_COMMAND[args.kind],
                  output_image=args.output)
    try:
        sidecar = render(job)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.output} and {job.sidecar_path}")
    if "slope" in sidecar:
        print(f"fitted slope {sidecar['slope']!r}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
