"""Render a certificate sweep CSV as a three-series comparison figure.

Reads the documented sweep schema (columns lambda, bound_new, bound_cc among
others) and plots both bounds against the decay rate plus a constant
1 - 1/e reference line. No numbers are recomputed; everything plotted comes
from the CSV verbatim.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.fonttype"] = "none"  # keep legend text as text

import matplotlib.pyplot as plt

REQUIRED_COLUMNS = ("lambda", "bound_new", "bound_cc")
REFERENCE = 1.0 - math.exp(-1.0)


class SweepDataError(ValueError):
    pass


def read_sweep(csv_path) -> dict[str, list[float]]:
    """Columns needed for the figure; fails loudly on schema problems."""
    with open(csv_path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in REQUIRED_COLUMNS if c not in header]
        if missing:
            raise SweepDataError(f"{csv_path}: missing required columns: {', '.join(missing)}")
        rows = list(reader)
    if not rows:
        raise SweepDataError(f"{csv_path}: no rows")
    out: dict[str, list[float]] = {c: [] for c in REQUIRED_COLUMNS}
    for i, row in enumerate(rows, start=2):
        for c in REQUIRED_COLUMNS:
            try:
                out[c].append(float(row[c]))
            except (TypeError, ValueError):
                raise SweepDataError(f"{csv_path}: line {i}: bad value for {c!r}: {row[c]!r}") from None
    return out


def render(csv_path, out_path, png: bool = False) -> Path:
    data = read_sweep(csv_path)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(data["lambda"], data["bound_new"], marker="o", color="tab:red",
            label="certificate f(greedy)/B")
    ax.plot(data["lambda"], data["bound_cc"], marker="s", color="tab:blue",
            label="greedy-curvature bound")
    ax.axhline(REFERENCE, linestyle="--", color="gray", label="1 - 1/e")
    ax.set_xscale("log")
    ax.set_xlabel("decay rate")
    ax.set_ylabel("performance bound")
    ax.set_title("Certified greedy performance vs decay rate")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    out_path = Path(out_path)
    fig.savefig(out_path, format="png" if png else "svg")
    plt.close(fig)
    return out_path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="plot_sweep", description=__doc__)
    parser.add_argument("csv", help="sweep CSV produced by the solver")
    parser.add_argument("out", help="output image path")
    parser.add_argument("--png", action="store_true", help="write PNG instead of SVG")
    args = parser.parse_args(argv)
    try:
        out = render(args.csv, args.out, png=args.png)
    except (SweepDataError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
