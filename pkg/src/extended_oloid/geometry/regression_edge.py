# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    regression_edge.py
# @author  extended-oloid contributors
# @date    2026-02-23

"""
Edge of regression R of the extended oloid.

R is the envelope condition f = f' = f'' = 0 of the pencil: on the ruling through t
it is the touching point of Q_phi(t). It is given per ruling (g) and per family
parameter (r).
"""

import math
from typing import NamedTuple

from .common import (SQRT3, DomainError, Point3, check_branch, intersect_lines, make_line, nonzero, sgn,
                     sqrt_boundary)


class QuadrantSigns(NamedTuple):
    sx: int
    sz: int


NEG = "Neg"
POS = "Pos"


def phi(t):
    c = math.cos(t)
    return (1 + 2 * c) / ((2 + c) * nonzero(c, "cos t"))


def rho(lam):
    return sgn(lam) * math.sqrt(1 - lam + lam * lam)


def check_ruled(lam):
    if 0 <= lam <= 1:
        raise DomainError(f"lambda = {lam:g} lies in [0, 1], Q_lambda carries no common ruling")


def phi_inverse_cos(lam):
    """cos of phi^-1(lambda), i.e. (1-lambda+rho)/lambda evaluated without cancellation."""
    check_ruled(lam)
    return 1 / (lam - 1 + rho(lam))


def phi_inverse(lam, side=POS):
    if side not in (NEG, POS):
        raise DomainError(f"side must be {NEG} or {POS}, got {side}")
    angle = math.acos(phi_inverse_cos(lam))
    return -angle if side == NEG else angle


def g(t, zb=1):
    check_branch(zb)
    s, c = math.sin(t), math.cos(t)
    nonzero(c, "cos t")
    nonzero(1 + c, "1+cos t")
    root = sqrt_boundary(1 + 2 * c)
    return Point3((s - s / c) / 3,
                  (2 + 3 * c - 3 * c * c - 2 * c ** 3) / (6 * (1 + c) * c),
                  zb * root ** 3 / (3 * (1 + c) * c))


def regression_parameter(t):
    """Ruling parameter m of the point of R on the ruling through t."""
    c = math.cos(t)
    return (1 + 2 * c) / (3 * nonzero(c, "cos t"))


def r(lam, q=QuadrantSigns(1, 1)):
    check_ruled(lam)
    sx, sz = q
    p = rho(lam)
    denom = 2 - lam + p
    r1 = math.sqrt((lam - 1) ** 3 * (2 - lam + 2 * p)) / (lam * denom)
    r2 = (lam * lam + 2 * lam - 2 + (lam - 2) * p) / (2 * lam * denom)
    r3 = sgn(lam) * math.sqrt(lam * (2 - lam + 2 * p)) / denom
    return Point3(sx * r1, r2, sz * r3)


QUADRANT_SIGNS = {1: (1, 1), 2: (-1, 1), 3: (-1, -1), 4: (1, -1)}


def regression_asymptote(k):
    if k not in QUADRANT_SIGNS:
        raise DomainError(f"asymptote index must be 1..4, got {k}")
    sx, sz = QUADRANT_SIGNS[k]
    return make_line((-sx, -0.5, 0.), (sx, 1., sz))


def asymptote_intersections():
    """S12, S23, S34, S41 where consecutive asymptotes of R meet."""
    lines = [regression_asymptote(k) for k in (1, 2, 3, 4)]
    return tuple(Point3(*map(float, intersect_lines(lines[k], lines[(k + 1) % 4]))) for k in range(4))


def cusps():
    """Endpoints of the double curves C_0 and C_1, where R has cusps."""
    half = SQRT3 / 2
    return (Point3(half, 0., 0.), Point3(-half, 0., 0.), Point3(0., 0., half), Point3(0., 0., -half))
