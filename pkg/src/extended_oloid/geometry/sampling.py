# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    sampling.py
# @author  extended-oloid contributors
# @date    2026-03-05

"""
Sample the curves and lines of the oloid geometry into tables with the columns
object, lambda, branch, t and x, y, z (or xi, eta for the development).
Parameter ranges are cut at poles, a row with branch "gap" and empty values
separates the resulting segments.
"""

import math

import numpy as np
import pandas as pd

from . import development, oloid_core, regression_edge, ruling_lines, touching_curve
from .common import (FOUR_PI_3, POLE_EPS, TWO_PI_3, DomainError, NoPolesError, OloidError, Point3,
                     is_infinite)

GAP = "gap"
COLUMNS_3D = ["object", "lambda", "branch", "t", "x", "y", "z"]
COLUMNS_2D = ["object", "lambda", "branch", "t", "xi", "eta"]

# object -> default parameter range
OBJECTS = {
    "oloid": (-TWO_PI_3, TWO_PI_3),
    "quadric": (-math.pi, math.pi),
    "touching": (-TWO_PI_3, 2 * math.pi),
    "regression": (-TWO_PI_3, TWO_PI_3),
    "asymptotes": (-5., 5.),
    "generators": (-3., 3.),
    "dev-touching": (-TWO_PI_3, TWO_PI_3),
    "dev-regression": (-TWO_PI_3, TWO_PI_3),
}
NEEDS_LAMBDA = {"quadric", "touching", "asymptotes", "generators", "dev-touching"}
PLANAR = {"dev-touching", "dev-regression"}
NUM_PARALLELS = 9
NUM_RULINGS = 12


def columns(obj):
    return COLUMNS_2D if obj in PLANAR else COLUMNS_3D


def split_segments(t_min, t_max, poles, eps=POLE_EPS):
    """Cut [t_min, t_max] at the poles, keeping eps away from each of them."""
    bounds = [t_min]
    for pole in sorted(set(poles)):
        if t_min < pole < t_max:
            bounds += [pole - eps, pole + eps]
    bounds.append(t_max)
    return [(lo, hi) for lo, hi in zip(bounds[::2], bounds[1::2]) if hi > lo]


def _grid(lo, hi, n, cosine):
    if not cosine:
        return np.linspace(lo, hi, n)
    return lo + (hi - lo) * (1 - np.cos(np.linspace(0, math.pi, n))) / 2


def segment_grid(lo, hi, n, knots=(), cosine=False):
    """Parameters for one segment, refined towards the knots if cosine spacing is used."""
    cuts = [lo] + sorted(k for k in set(knots) if lo < k < hi) + [hi]
    total = hi - lo
    result = []
    for a, b in zip(cuts, cuts[1:]):
        part = _grid(a, b, max(2, round(n * (b - a) / total)), cosine)
        result.extend(part if not result else part[1:])
    return result


def _periodic(values, t_min, t_max, period=FOUR_PI_3):
    """All values shifted by multiples of the period which fall into [t_min, t_max]."""
    result = []
    for value in values:
        first = math.ceil((t_min - value) / period)
        last = math.floor((t_max - value) / period)
        result.extend(value + k * period for k in range(first, last + 1))
    return result


def _gap_row(obj, lam):
    return {"object": obj, "lambda": lam, "branch": GAP, "t": math.nan}


def _point_row(obj, lam, branch, t, point, cols):
    row = {"object": obj, "lambda": lam, "branch": branch, "t": t}
    row.update(zip(cols[4:], map(float, point)))
    return row


def sample_curve(obj, lam, evaluate, t_min, t_max, n, poles=(), knots=(), cosine=False, eps=POLE_EPS):
    """Rows for a curve given by evaluate(t) -> (branch, point), cut at the poles."""
    cols = columns(obj)
    segments = split_segments(t_min, t_max, poles, eps)
    total = sum(hi - lo for lo, hi in segments)
    rows = []
    for lo, hi in segments:
        if rows and rows[-1]["branch"] != GAP:
            rows.append(_gap_row(obj, lam))
        for t in segment_grid(lo, hi, max(2, round(n * (hi - lo) / total)), knots, cosine):
            try:
                branch, point = evaluate(t)
            except OloidError:
                if rows and rows[-1]["branch"] != GAP:
                    rows.append(_gap_row(obj, lam))
                continue
            rows.append(_point_row(obj, lam, branch, float(t), point, cols))
    return rows


def sample_lines(obj, lam, lines, t_min, t_max, n, prefix):
    cols = columns(obj)
    rows = []
    for k, line in enumerate(lines, 1):
        if rows:
            rows.append(_gap_row(obj, lam))
        rows.extend(_point_row(obj, lam, f"{prefix}{k}", float(m), line.point_at(m), cols)
                    for m in np.linspace(t_min, t_max, n))
    return rows


def _touching_poles(lam):
    try:
        return touching_curve.poles(lam)
    except NoPolesError:
        return ()


def _sample_touching(lam, t_min, t_max, n, eps):
    def evaluate(t):
        cp = touching_curve.gamma(lam, t)
        return cp.branch, cp.point
    return sample_curve("touching", lam, evaluate, t_min, t_max, n, _touching_poles(lam), eps=eps)


def _sample_regression(lam, t_min, t_max, n, eps):
    # cos t = 0
    poles = _periodic((math.pi / 2,), t_min, t_max, math.pi)
    knots = (-TWO_PI_3, 0., TWO_PI_3)
    rows = []
    for zb, branch in ((1, "R+"), (-1, "R-")):
        if rows:
            rows.append(_gap_row("regression", lam))
        rows += sample_curve("regression", lam, lambda t: (branch, regression_edge.g(t, zb)),
                             t_min, t_max, n, poles, knots, cosine=True, eps=eps)
    return rows


def _dev_branch(t):
    return f"p{round((t - development.h_step(t)) / FOUR_PI_3)}"


def _sample_dev_touching(lam, t_min, t_max, n, eps):
    if is_infinite(lam):
        poles = (-math.pi / 2, math.pi / 2)
    elif abs(lam) >= 1 and math.acos(-1 / lam) <= TWO_PI_3:
        poles = (-math.acos(-1 / lam), math.acos(-1 / lam))
    else:
        poles = ()
    return sample_curve("dev-touching", lam, lambda t: (_dev_branch(t), development.dev_touching(lam, t)),
                        t_min, t_max, n, _periodic(poles, t_min, t_max), eps=eps)


def _sample_dev_regression(lam, t_min, t_max, n, eps):
    poles = _periodic((-math.pi / 2, math.pi / 2), t_min, t_max)
    knots = _periodic((-TWO_PI_3, 0., TWO_PI_3), t_min, t_max)
    return sample_curve("dev-regression", lam, lambda t: (_dev_branch(t), development.dev_regression(t)),
                        t_min, t_max, n, poles, knots, cosine=True, eps=eps)


def _sample_oloid(lam, t_min, t_max, n, eps):
    rows = sample_curve("oloid", lam, lambda t: ("kA", oloid_core.circle_point_A(t)), t_min, t_max, n)
    for zb, branch in ((1, "kB+"), (-1, "kB-")):
        rows.append(_gap_row("oloid", lam))
        rows += sample_curve("oloid", lam, lambda t: (branch, oloid_core.circle_point_B(t, zb)),
                             t_min, t_max, n)
    lo, hi = max(t_min, -TWO_PI_3), min(t_max, TWO_PI_3)
    for t in np.linspace(lo, hi, NUM_RULINGS + 1)[:-1] + (hi - lo) / (2 * NUM_RULINGS):
        for zb, branch in ((1, "L+"), (-1, "L-")):
            rows.append(_gap_row("oloid", lam))
            rows += [_point_row("oloid", lam, branch, float(t), oloid_core.ruling_point(m, t, zb), COLUMNS_3D)
                     for m in (0., 1.)]
    return rows


def quadric_parallel(lam, v, u):
    """Point of Q_lambda on the parallel v at angle u."""
    if is_infinite(lam):
        return Point3(v, (u * u - v * v) / 2, u)
    if lam == 0:
        return oloid_core.circle_point_A(u)
    if lam == 1:
        return Point3(0., 0.5 + math.cos(u), math.sin(u))
    a2, b2, c2 = 1 - lam, 1 - lam + lam * lam, lam
    y0 = lam - 0.5
    if lam < 0:
        return Point3(math.sqrt(a2) * math.cosh(v) * math.cos(u), y0 + math.sqrt(b2) * math.cosh(v) * math.sin(u),
                      math.sqrt(-c2) * math.sinh(v))
    if lam < 1:
        return Point3(math.sqrt(a2) * math.cos(v) * math.cos(u), y0 + math.sqrt(b2) * math.sin(v),
                      math.sqrt(c2) * math.cos(v) * math.sin(u))
    return Point3(math.sqrt(-a2) * math.sinh(v), y0 + math.sqrt(b2) * math.cosh(v) * math.cos(u),
                  math.sqrt(c2) * math.cosh(v) * math.sin(u))


def quadric_parallels(lam):
    if lam in (0, 1):
        return [0.]
    if is_infinite(lam):
        return list(np.linspace(-2, 2, NUM_PARALLELS))
    if 0 < lam < 1:
        return list(np.linspace(-math.pi / 2, math.pi / 2, NUM_PARALLELS + 2)[1:-1])
    return list(np.linspace(-1.5, 1.5, NUM_PARALLELS))


def _sample_quadric(lam, t_min, t_max, n, eps):
    rows = []
    for index, v in enumerate(quadric_parallels(lam)):
        if rows:
            rows.append(_gap_row("quadric", lam))
        rows += [_point_row("quadric", lam, f"v{index}", float(u), quadric_parallel(lam, v, u), COLUMNS_3D)
                 for u in np.linspace(t_min, t_max, n)]
    return rows


_SAMPLERS = {
    "oloid": _sample_oloid,
    "quadric": _sample_quadric,
    "touching": _sample_touching,
    "regression": _sample_regression,
    "asymptotes": lambda lam, lo, hi, n, eps: sample_lines(
        "asymptotes", lam, [touching_curve.asymptote(lam, k) for k in (1, 2, 3, 4)], lo, hi, n, "A"),
    "generators": lambda lam, lo, hi, n, eps: sample_lines(
        "generators", lam, ruling_lines.common_generators(lam), lo, hi, n, "G"),
    "dev-touching": _sample_dev_touching,
    "dev-regression": _sample_dev_regression,
}


def _collapse_gaps(df):
    """Drop leading, trailing and repeated gap rows."""
    gap = df["branch"] == GAP
    df = df[~(gap & gap.shift(1, fill_value=True))]
    if len(df) and df["branch"].iloc[-1] == GAP:
        df = df.iloc[:-1]
    return df.reset_index(drop=True)


def sample(obj, lam=None, t_min=None, t_max=None, n=200, eps=POLE_EPS):
    """Sample one object into a DataFrame."""
    if obj not in OBJECTS:
        raise DomainError(f"unknown object '{obj}', expected one of {', '.join(OBJECTS)}")
    if obj in NEEDS_LAMBDA and lam is None:
        raise DomainError(f"object '{obj}' needs a lambda value")
    if n < 2:
        raise DomainError(f"at least two samples are needed, got n = {n}")
    lo, hi = OBJECTS[obj]
    lo = lo if t_min is None else t_min
    hi = hi if t_max is None else t_max
    if hi <= lo:
        raise DomainError(f"empty parameter range [{lo:g}, {hi:g}]")
    rows = _SAMPLERS[obj](math.nan if lam is None else lam, lo, hi, n, eps)
    return _collapse_gaps(pd.DataFrame(rows, columns=columns(obj)))


def polylines(df):
    """Split a sampled table at its gap rows into (object, lambda, branch, points) tuples."""
    coords = [c for c in df.columns[4:]]
    result = []
    for _, part in df.groupby((df["branch"] == GAP).cumsum(), sort=False):
        part = part[part["branch"] != GAP]
        if len(part) > 1:
            first = part.iloc[0]
            result.append((first["object"], first["lambda"], first["branch"], part[coords].to_numpy()))
    return result


def to_records(df):
    """JSON friendly rows: coordinates as a list, gaps with null coordinates, infinite lambda as "inf"."""
    coords = list(df.columns[4:])
    records = []
    for row in df.to_dict("records"):
        lam = row["lambda"]
        gap = row["branch"] == GAP
        records.append({
            "object": row["object"],
            "lambda": None if pd.isna(lam) else ("inf" if is_infinite(lam) else lam),
            "branch": row["branch"],
            "t": None if gap else row["t"],
            "coords": None if gap else [row[c] for c in coords],
        })
    return records


def select_branches(df, branches):
    """Keep the rows of the given branches, with single gap rows between the remaining segments."""
    return _collapse_gaps(df[df["branch"].isin(set(branches)) | (df["branch"] == GAP)])
