"""Render duality-curve panels and vector-field arrow plots from CSV files.

Inputs are the schema=1 CSV files written by the oam-mzi CLI:
  duality_curves: header alpha,p_plus,sensitivity,distinguishability,likelihood
  vector_field:   header x,y,ex,ey (row-major square grid, waist units)
Line styles: detection probability solid, sensitivity dotted,
distinguishability dashed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

# fixed salt so SVG element ids are reproducible across runs
matplotlib.rcParams["svg.hashsalt"] = "oam-figures"

SCHEMA_LINE = "# schema=1"

HEADERS = {
    "duality_curves": "alpha,p_plus,sensitivity,distinguishability,likelihood",
    "vector_field": "x,y,ex,ey",
}


class SchemaError(ValueError):
    """Input file does not match the versioned CSV schema."""


@dataclass(frozen=True)
class FigureSpec:
    input_path: str
    style: str  # "vector_field" or "duality_curves"
    output_path: str

    def __post_init__(self):
        if self.style not in HEADERS:
            raise ValueError(f"unknown style {self.style!r}")


def load_csv(path: str, style: str) -> np.ndarray:
    """Read and validate a schema=1 CSV; returns the numeric rows."""
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0].strip() != SCHEMA_LINE:
        raise SchemaError(f"{path}: missing '{SCHEMA_LINE}' first line")
    if len(lines) < 2 or lines[1].strip() != HEADERS[style]:
        raise SchemaError(
            f"{path}: expected header {HEADERS[style]!r} for style {style!r}"
        )
    rows = [line for line in lines[2:] if line.strip()]
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    try:
        data = np.array([[float(v) for v in line.split(",")] for line in rows])
    except ValueError as exc:
        raise SchemaError(f"{path}: malformed numeric row ({exc})") from None
    if data.shape[1] != len(HEADERS[style].split(",")):
        raise SchemaError(f"{path}: wrong column count")
    return data


def _render_duality(data: np.ndarray, output_path: str) -> None:
    alpha = data[:, 0] / math.pi
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(alpha, data[:, 1], "k-", label="detection probability")
    ax.plot(alpha, data[:, 2], "k:", label="sensitivity")
    ax.plot(alpha, data[:, 3], "k--", label="distinguishability")
    ax.set_xlabel(r"$\alpha/\pi$")
    ax.set_ylim(-0.05, 1.05)
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    _save(fig, output_path)


def _render_vector_field(data: np.ndarray, output_path: str) -> None:
    x, y, ex, ey = data.T
    mag = np.hypot(ex, ey)
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    ax.quiver(x, y, ex, ey, pivot="middle", scale=None, width=0.004)
    ax.set_xlabel("x (waist units)")
    ax.set_ylabel("y (waist units)")
    ax.set_aspect("equal")
    ax.set_title(f"peak |E| = {mag.max():.3g}", fontsize=9)
    fig.tight_layout()
    _save(fig, output_path)


def _save(fig, output_path: str) -> None:
    suffix = Path(output_path).suffix.lower()
    if suffix == ".svg":
        # drop the creation date so repeated runs are byte-identical
        fig.savefig(output_path, metadata={"Date": None})
    else:
        fig.savefig(output_path, dpi=150)
    plt.close(fig)


def render(spec: FigureSpec) -> str:
    """Render the figure described by spec; returns the output path."""
    data = load_csv(spec.input_path, spec.style)
    if spec.style == "duality_curves":
        _render_duality(data, spec.output_path)
    else:
        _render_vector_field(data, spec.output_path)
    return spec.output_path
