"""Render scan tables into figures with fitted-parameter JSON sidecars.

Every number drawn on a figure is also written to the sidecar, which is the
source of truth; fits are recomputed here from the raw rows rather than
trusted from the producing command's columns.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .schemas import SchemaError, read_rows

KINDS = ("slope_fit", "phase_grid", "growth_curve")


@dataclass(frozen=True)
class PlotJob:
    input_csv: str
    kind: str
    output_image: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaError(f"unknown plot kind {self.kind!r}")

    @property
    def sidecar_path(self) -> str:
        return str(Path(self.output_image).with_suffix(".json"))


def least_squares_line(x, y) -> tuple[float, float, float]:
    """Slope, intercept, and residual norm of the best-fit line.

    Solved through the normal equations in centered coordinates, so the
    result is an independent recomputation rather than a polyfit wrapper.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    xm, ym = x.mean(), y.mean()
    denom = float(np.sum((x - xm) ** 2))
    if denom == 0.0:
        raise SchemaError("degenerate fit: all abscissae equal")
    slope = float(np.sum((x - xm) * (y - ym)) / denom)
    intercept = ym - slope * xm
    residual = float(np.sqrt(np.sum((y - slope * x - intercept) ** 2)))
    return slope, intercept, residual


def _render_slope_fit(rows, job):
    x = [float(r["loglogN"]) for r in rows]
    y = [float(r["log_ratio"]) for r in rows]
    slope, intercept, residual = least_squares_line(x, y)
    reported = {float(r["slope"]) for r in rows}
    sidecar = {
        "kind": job.kind,
        "input": str(job.input_csv),
        "points": [{"N": int(r["N"]), "loglogN": float(r["loglogN"]),
                    "log_ratio": float(r["log_ratio"])} for r in rows],
        "slope": slope,
        "intercept": intercept,
        "residual": residual,
        "producer_slope": sorted(reported)[0],
        "p": float(rows[0]["p"]),
        "beta": float(rows[0]["beta"]),
    }
    fig, ax = plt.subplots(figsize=(5, 3.6))
    ax.plot(x, y, "o", label="observed")
    xs = np.linspace(min(x), max(x), 64)
    ax.plot(xs, slope * xs + intercept, "-",
            label=f"fit slope {slope:.3f}")
    ax.set_xlabel("loglog N")
    ax.set_ylabel("log ratio")
    ax.set_title(f"duality ratio growth, p={sidecar['p']:g}, "
                 f"beta={sidecar['beta']:g}")
    ax.legend()
    return fig, sidecar


def _render_phase_grid(rows, job):
    ps = sorted({float(r["p"]) for r in rows})
    betas_by_p = {}
    for r in rows:
        betas_by_p.setdefault(float(r["p"]), []).append(r)
    n_cols = max(len(v) for v in betas_by_p.values())
    grid = np.full((len(ps), n_cols), np.nan)
    cells = []
    for i, p in enumerate(ps):
        row_cells = sorted(betas_by_p[p], key=lambda r: float(r["beta"]))
        for j, r in enumerate(row_cells):
            grid[i, j] = 1.0 if r["label"] == "convergent" else 0.0
            cells.append({"p": p, "beta": float(r["beta"]),
                          "label": r["label"],
                          "majorant_decay": float(r["majorant_decay"])})
    sidecar = {"kind": job.kind, "input": str(job.input_csv), "cells": cells}
    fig, ax = plt.subplots(figsize=(5, 3.6))
    ax.imshow(grid, cmap="RdYlGn", vmin=0, vmax=1, aspect="auto")
    ax.set_yticks(range(len(ps)), [f"p={p:g}" for p in ps])
    ax.set_xticks(range(n_cols),
                  ["low", "critical", "high"][:n_cols] if n_cols <= 3
                  else range(n_cols))
    for i, p in enumerate(ps):
        row_cells = sorted(betas_by_p[p], key=lambda r: float(r["beta"]))
        for j, r in enumerate(row_cells):
            ax.text(j, i, f"{float(r['beta']):.2f}\n{r['label'][:4]}",
                    ha="center", va="center", fontsize=8)
    ax.set_title("membership phase cells")
    return fig, sidecar


def _render_growth_curve(rows, job):
    ns = [int(r["n"]) for r in rows]
    lower = [float(r["statistic_lower"]) for r in rows]
    upper = [float(r["statistic_upper"]) for r in rows]
    sidecar = {
        "kind": job.kind,
        "input": str(job.input_csv),
        "mode": rows[0]["mode"],
        "p": float(rows[0]["p"]),
        "points": [{"n": n, "statistic_lower": lo, "statistic_upper": up}
                   for n, lo, up in zip(ns, lower, upper)],
        "final_lower": lower[-1],
        "final_upper": upper[-1],
    }
    fig, ax = plt.subplots(figsize=(5, 3.6))
    ax.semilogx(ns, lower, "o-", label="lower")
    if any(abs(u - l) > 1e-15 for u, l in zip(upper, lower)):
        ax.semilogx(ns, upper, "s--", label="upper")
        ax.legend()
    ax.set_xlabel("n")
    ax.set_ylabel("normalized growth statistic")
    ax.set_title(f"coefficient growth, p={sidecar['p']:g} ({sidecar['mode']})")
    return fig, sidecar


def render(job: PlotJob) -> dict:
    """Execute one job: write the image and the JSON sidecar, return the
    sidecar payload."""
    rows = read_rows(job.input_csv, job.kind)
    renderer = {"slope_fit": _render_slope_fit,
                "phase_grid": _render_phase_grid,
                "growth_curve": _render_growth_curve}[job.kind]
    fig, sidecar = renderer(rows, job)
    fig.tight_layout()
    fig.savefig(job.output_image, dpi=120)
    plt.close(fig)
    Path(job.sidecar_path).write_text(
        json.dumps(sidecar, sort_keys=True, indent=2) + "\n")
    return sidecar
