# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    common.py
# @author  extended-oloid contributors
# @date    2026-02-14

import dataclasses
import json
import math
import os
import sys
import time
from typing import NamedTuple

import numpy as np

TWO_PI_3 = 2 * math.pi / 3
FOUR_PI_3 = 4 * math.pi / 3
SQRT3 = math.sqrt(3)

# the single point at infinity of the family parameter
INF = math.inf

# 1+2cos t within this distance of zero is the domain boundary
SEAM_EPS = 1e-14
# parameter distance kept from poles when sampling
POLE_EPS = 1e-6
# denominators this close to zero count as poles
POLE_SLACK = 1e-15
# default half width of the development plots
ETA_WINDOW = 12.


class OloidError(Exception):
    pass


class DomainError(OloidError):
    pass


class PoleError(OloidError):
    pass


class BoundaryError(OloidError):
    pass


class DegenerateError(OloidError):
    pass


class NoPolesError(OloidError):
    pass


class UnsupportedLambdaError(OloidError):
    pass


class NonMonotoneError(OloidError):
    pass


@dataclasses.dataclass(frozen=True)
class Tolerance:
    abs: float = 1e-10
    rel: float = 1e-10

    def limit(self, scale=1.):
        return self.abs + self.rel * abs(scale)


DEFAULT_TOL = Tolerance()


class Point3(NamedTuple):
    x: float
    y: float
    z: float


Vec3 = Point3


class PlanePoint(NamedTuple):
    xi: float
    eta: float


class Line3(NamedTuple):
    base: Point3
    dir: Vec3

    def point_at(self, m):
        return Point3(*(np.asarray(self.base) + m * np.asarray(self.dir)))

    def distance_to(self, p):
        d = np.asarray(self.dir, dtype=float)
        return float(np.linalg.norm(np.cross(np.asarray(p) - np.asarray(self.base), d)) / np.linalg.norm(d))


def make_line(base, direction):
    if not np.any(np.asarray(direction)):
        raise DegenerateError("line direction must not vanish")
    return Line3(Point3(*map(float, base)), Point3(*map(float, direction)))


def line_through(p, q):
    return make_line(p, np.asarray(q) - np.asarray(p))


def window_distance(line, other, params=np.linspace(-5, 5, 41)):
    """Largest distance of the points of line (at the given parameters) from the other line."""
    return max(other.distance_to(line.point_at(m)) for m in params)


def intersect_lines(a, b):
    """Closest point of two lines in the least squares sense (their intersection if they meet)."""
    system = np.column_stack([a.dir, -np.asarray(b.dir)])
    (s, _), *_ = np.linalg.lstsq(system, np.asarray(b.base) - np.asarray(a.base), rcond=None)
    return a.point_at(s)


def is_infinite(lam):
    return math.isinf(lam)


def parse_lambda(text):
    """Parse a family parameter; "inf", "+inf" and "-inf" all denote the point at infinity."""
    try:
        value = float(text)
    except ValueError:
        value = math.nan
    if math.isnan(value):
        raise DomainError(f"lambda must be a number or inf, got '{text}'")
    return INF if math.isinf(value) else value


def format_lambda(lam):
    return "inf" if is_infinite(lam) else repr(lam)


def check_branch(zb):
    if zb not in (1, -1):
        raise DomainError(f"z branch must be +1 or -1, got {zb}")
    return zb


def sgn(value):
    return int(value > 0) - int(value < 0)


def normalize_angle(t):
    """Map t into (-pi, pi]."""
    r = math.remainder(t, 2 * math.pi)
    return math.pi if r == -math.pi else r


def sqrt_boundary(value, what="1+2cos t"):
    """Square root of a quantity that must not be negative, snapping the domain boundary to zero."""
    if value < -SEAM_EPS:
        raise DomainError(f"{what} = {value:.3g} < 0")
    return math.sqrt(value) if value > SEAM_EPS else 0.


def nonzero(value, what):
    if abs(value) <= POLE_SLACK:
        raise PoleError(f"{what} vanishes")
    return value


def save_json(json_file, content):
    with open(json_file + ".new", "w", encoding="utf8") as output:
        json.dump(content, output, indent=2)
    os.rename(json_file + ".new", json_file)


def write_csv(filename, df_out):
    """Write df_out with round-trip safe floats. No-op if df_out is None."""
    if df_out is None:
        return
    df_out.to_csv(filename, index=False, float_format="%.17g")


class Benchmarker:
    """
    class for timing a code block using a "with"-statement,
    reporting to stderr only when active
    """
    def __init__(self, active, description):
        self.active = active
        self.description = description
        self.duration = 0.

    def __enter__(self):
        self.started = time.time()
        return self

    def __exit__(self, *args):
        self.duration = time.time() - self.started
        if self.active:
            print("%s finished after %.3f seconds" % (self.description, self.duration), file=sys.stderr)
