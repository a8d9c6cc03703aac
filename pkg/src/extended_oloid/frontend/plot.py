# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    plot.py
# @author  extended-oloid contributors
# @date    2026-03-12

"""
SVG rendering of sampled objects as 2D projections.
Output is byte-identical for identical input (fixed hash salt, no date in the metadata).
"""

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import shapely  # noqa: E402
from shapely.geometry import LineString  # noqa: E402

from ..geometry.common import DomainError  # noqa: E402
from ..geometry.sampling import PLANAR, polylines  # noqa: E402

# projection -> (horizontal, vertical) coordinate
PROJECTIONS = {
    "X": ("y", "z"),
    "Y": ("x", "z"),
    "Z": ("x", "y"),
    "plane": ("xi", "eta"),
}
COLORS = {
    "oloid": "#7f7f7f",
    "quadric": "#bcbd22",
    "touching": "#1f77b4",
    "regression": "#d62728",
    "asymptotes": "#2ca02c",
    "generators": "#9467bd",
    "dev-touching": "#1f77b4",
    "dev-regression": "#d62728",
}
SVG_RC = {"svg.hashsalt": "extended-oloid", "svg.fonttype": "none"}


def parse_window(text):
    """A single number w means [-w, w] in both directions, "xmin,xmax,ymin,ymax" gives the box explicitly."""
    try:
        values = [float(v) for v in str(text).split(",")]
    except ValueError:
        raise DomainError(f"window must be a number or xmin,xmax,ymin,ymax, got '{text}'") from None
    if len(values) == 1:
        values = [-abs(values[0]), abs(values[0])] * 2
    if len(values) != 4:
        raise DomainError(f"window needs one or four values, got '{text}'")
    xmin, xmax, ymin, ymax = values
    if xmin >= xmax or ymin >= ymax:
        raise DomainError(f"empty plot window '{text}'")
    return xmin, ymin, xmax, ymax


def clip_polyline(points, window):
    """Parts of the 2D polyline inside the window (xmin, ymin, xmax, ymax)."""
    clipped = shapely.clip_by_rect(LineString(points), *window)
    if clipped.is_empty:
        return []
    parts = clipped.geoms if hasattr(clipped, "geoms") else [clipped]
    return [np.asarray(part.coords) for part in parts if part.geom_type == "LineString"]


def _axis_indices(df, projection):
    coords = list(df.columns[4:])
    horizontal, vertical = PROJECTIONS[projection]
    if horizontal not in coords or vertical not in coords:
        kind = "the plane projection" if projection == "plane" else f"projection {projection}"
        raise DomainError(f"{', '.join(sorted(set(df['object'])))} cannot be drawn in {kind}")
    return coords.index(horizontal), coords.index(vertical)


def check_projection(objects, projection):
    if projection not in PROJECTIONS:
        raise DomainError(f"unknown projection '{projection}'")
    for obj in objects:
        if (obj in PLANAR) != (projection == "plane"):
            raise DomainError(f"{obj} cannot be drawn in projection {projection}")


def render_svg(frames, projection, window, out, dashed=(), thick=(), title=None):
    """Draw all polylines of the sampled frames and save them as SVG. Returns (drawn, dropped) polyline counts."""
    drawn = dropped = 0
    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(6, 6))
        xmin, ymin, xmax, ymax = window
        ax.axhline(0, color="0.75", linewidth=0.5)
        ax.axvline(0, color="0.75", linewidth=0.5)
        for df in frames:
            if df.empty:
                continue
            h, v = _axis_indices(df, projection)
            for obj, _, _, points in polylines(df):
                parts = clip_polyline(points[:, [h, v]], window)
                if not parts:
                    dropped += 1
                for part in parts:
                    ax.plot(part[:, 0], part[:, 1], color=COLORS.get(obj, "black"),
                            linestyle="--" if obj in dashed else "-",
                            linewidth=1.8 if obj in thick else 0.8)
                    drawn += 1
        ax.set_xlim(xmin, xmax)
        ax.set_ylim(ymin, ymax)
        ax.set_aspect("equal")
        ax.set_xlabel(PROJECTIONS[projection][0])
        ax.set_ylabel(PROJECTIONS[projection][1])
        if title:
            ax.set_title(title)
        fig.savefig(out, format="svg", metadata={"Date": None})
        plt.close(fig)
    return drawn, dropped
