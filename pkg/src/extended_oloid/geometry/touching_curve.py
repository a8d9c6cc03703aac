# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    touching_curve.py
# @author  extended-oloid contributors
# @date    2026-02-20

"""
The touching curve C_lambda along which Q_lambda touches the extended oloid.

On I1 the curve is kappa(lambda, t) on the z >= 0 ruling family, on I2 it is the
z-mirror of kappa(lambda, 4pi/3 - t). For lambda outside (-1, 2) it has four poles
and four asymptotes, lambda = infinity gives the limit curve kappa*.
"""

import math
from typing import NamedTuple, Optional

import numpy as np

from . import oloid_core
from .common import (FOUR_PI_3, SQRT3, BoundaryError, DomainError, NoPolesError, Point3,
                     PoleError, SEAM_EPS, UnsupportedLambdaError, Vec3, is_infinite, make_line, nonzero,
                     sqrt_boundary)
from .oloid_core import GAMMA1, GAMMA2
from .quadric_pencil import f_lambda


class CurvePoint(NamedTuple):
    t: float
    branch: str
    point: Point3


class PoleSet(NamedTuple):
    t1: float
    t2: float
    t3: float
    t4: float


class AxisPoints(NamedTuple):
    X1: Optional[Point3]
    Z1: Optional[Point3]
    X2: Optional[Point3]
    Z2: Optional[Point3]


class ProjectionConic(NamedTuple):
    plane: str
    center: Optional[tuple]
    residual: object


def psi(lam, t):
    c = math.cos(t)
    return lam * (1 + c) / nonzero(1 + lam * c, "1+lambda cos t")


def kappa(lam, t):
    s, c = math.sin(t), math.cos(t)
    root = sqrt_boundary(1 + 2 * c)
    denom = nonzero(1 + lam * c, "1+lambda cos t")
    return Point3((1 - lam) * s / denom,
                  (2 * lam - 1 + (lam - 2) * c) / (2 * denom),
                  lam * root / denom)


def limit_kappa(t):
    """The touching curve of the hyperbolic paraboloid Q_inf."""
    s, c = math.sin(t), math.cos(t)
    root = sqrt_boundary(1 + 2 * c)
    nonzero(c, "cos t")
    return Point3(-s / c, 0.5 + 1 / c, root / c)


def kappa_dot(lam, t):
    s, c = math.sin(t), math.cos(t)
    if 1 + 2 * c <= SEAM_EPS:
        sqrt_boundary(1 + 2 * c)
        raise BoundaryError(f"the tangent diverges at t = {t:.6g} (1+2cos t = 0)")
    denom = nonzero(1 + lam * c, "1+lambda cos t") ** 2
    return Vec3((1 - lam) * (lam + c) / denom,
                (1 - lam + lam * lam) * s / denom,
                lam * (lam * (1 + c) - 1) * s / (denom * math.sqrt(1 + 2 * c)))


def limit_kappa_dot(t):
    s, c = math.sin(t), math.cos(t)
    if 1 + 2 * c <= SEAM_EPS:
        sqrt_boundary(1 + 2 * c)
        raise BoundaryError(f"the tangent diverges at t = {t:.6g} (1+2cos t = 0)")
    c2 = nonzero(c, "cos t") ** 2
    return Vec3(-1 / c2, s / c2, s * (1 + c) / (math.sqrt(1 + 2 * c) * c2))


def _mirror_z(p):
    return Point3(p[0], p[1], -p[2])


def gamma_branch(lam, t, branch):
    """Evaluate one branch of C_lambda without reducing t."""
    point = limit_kappa if is_infinite(lam) else lambda u: kappa(lam, u)
    if branch == GAMMA1:
        return point(t)
    if branch == GAMMA2:
        return _mirror_z(point(FOUR_PI_3 - t))
    raise DomainError(f"unknown branch '{branch}'")


def gamma(lam, t):
    r, branch = oloid_core.reduce_loop(t)
    return CurvePoint(r, branch, gamma_branch(lam, r, branch))


def gamma_dot(lam, t):
    """Derivative of gamma with respect to the loop parameter."""
    r, branch = oloid_core.reduce_loop(t)
    derivative = limit_kappa_dot if is_infinite(lam) else lambda u: kappa_dot(lam, u)
    if branch == GAMMA1:
        return derivative(r)
    d = derivative(FOUR_PI_3 - r)
    return Vec3(-d[0], -d[1], d[2])


def tangent_line(lam, t):
    return make_line(gamma(lam, t).point, gamma_dot(lam, t))


def touching_ruling_point(lam, t):
    """The point of C_lambda computed on the ruling through t (via psi) instead of kappa."""
    r, branch = oloid_core.reduce_loop(t)
    u = r if branch == GAMMA1 else FOUR_PI_3 - r
    return oloid_core.ruling_point_loop(psi(lam, u), r)


def ruling_quadratic(lam, t, zb=1):
    """Coefficients (a, b, c) of m -> f_lambda(ruling_point(m, t, zb)) = a m^2 + b m + c."""
    q0, q1, q2 = (f_lambda(lam, oloid_core.ruling_point(m, t, zb)) for m in (0., 1., 2.))
    a = (q2 - 2 * q1 + q0) / 2
    return a, q1 - q0 - a, q0


def poles_inf():
    return PoleSet(-math.pi / 2, math.pi / 2, 5 * math.pi / 6, 11 * math.pi / 6)


def poles(lam):
    if is_infinite(lam):
        return poles_inf()
    if -1 < lam < 2:
        raise NoPolesError(f"C_{lam:g} has no poles for -1 < lambda < 2")
    a = math.acos(-1 / lam)
    return PoleSet(-a, a, FOUR_PI_3 - a, FOUR_PI_3 + a)


# sign of the x and z components of the asymptotes A_2, A_3, A_4 relative to A_1
_ASYMPTOTE_SIGNS = {1: (1, 1), 2: (-1, 1), 3: (-1, -1), 4: (1, -1)}


def _check_index(k):
    if k not in _ASYMPTOTE_SIGNS:
        raise DomainError(f"asymptote index must be 1..4, got {k}")
    return _ASYMPTOTE_SIGNS[k]


def asymptote(lam, k):
    sx, sz = _check_index(k)
    if is_infinite(lam):
        base, direction = (-1., -0.5, 0.), (1., 1., 1.)
    else:
        if -1 <= lam <= 2:
            raise DomainError(f"C_{lam:g} has asymptotes only for lambda outside [-1, 2]")
        b2 = 1 - lam + lam * lam
        x1 = b2 / (2 + lam - lam * lam) * math.sqrt(1 - 1 / lam ** 2)
        y1 = (2 - 2 * lam - lam * lam) / (2 * lam * (lam - 2))
        y2 = (1 - 4 * lam + lam * lam) / (2 * (lam * lam - 1))
        z2 = b2 / (lam * lam - 1) * math.sqrt(lam / (lam - 2))
        base, direction = (x1, y1, 0.), (-x1, y2 - y1, z2)
    return make_line((sx * base[0], base[1], sz * base[2]),
                     (sx * direction[0], direction[1], sz * direction[2]))


def asymptote_plane_points(lam, t):
    """Intersections of the tangent of C_lambda at t in I1 with the planes x = 0 and z = 0."""
    s, c = math.sin(t), math.cos(t)
    root = sqrt_boundary(1 + 2 * c)
    q = 1 + c + c * c
    on_x = Point3(0., (lam - 2 + (2 * lam - 1) * c) / (2 * nonzero(lam + c, "lambda+cos t")),
                  lam * q / ((lam + c) * nonzero(root, "1+2cos t")))
    w = nonzero(lam * (1 + c) - 1, "lambda(1+cos t)-1")
    on_z = Point3((lam - 1) * q / (w * nonzero(s, "sin t")), -(1 + lam + (2 - lam) * c) / (2 * w), 0.)
    return on_x, on_z


def axis_point(lam, name):
    """One of the intersections X1, X2 (plane x=0) and Z1, Z2 (plane z=0) of C_lambda."""
    if name not in AxisPoints._fields:
        raise DomainError(f"unknown axis point '{name}'")
    if is_infinite(lam):
        x_point, z_point = Point3(0., 1.5, SQRT3), Point3(SQRT3, -1.5, 0.)
    elif name[0] == "X":
        denom = nonzero(1 + lam, "1+lambda")
        x_point = Point3(0., -3 * (1 - lam) / (2 * denom), SQRT3 * lam / denom)
    else:
        denom = nonzero(2 - lam, "2-lambda")
        z_point = Point3(SQRT3 * (1 - lam) / denom, 3 * lam / (2 * denom), 0.)
    if name == "X1":
        return x_point
    if name == "X2":
        return _mirror_z(x_point)
    if name == "Z1":
        return z_point
    return Point3(-z_point.x, z_point.y, z_point.z)


def axis_points(lam):
    """All four axis points; a point at a pole is None."""
    result = {}
    for name in AxisPoints._fields:
        try:
            result[name] = axis_point(lam, name)
        except PoleError:
            result[name] = None
    return AxisPoints(**result)


def projection_residuals_inf(p):
    x, y, z = p
    return ((y + 0.5) ** 2 - z * z - 1,
            (x * x - z * z) ** 2 - 2 * (x * x + z * z) - 3,
            (y - 0.5) ** 2 - x * x - 1)


def x_projection_conic(lam):
    """The conic containing the projection of C_lambda onto the plane x = 0."""
    if is_infinite(lam) or lam * (lam - 2) == 0:
        raise UnsupportedLambdaError(f"the projection of C_{lam:g} onto x = 0 is no central conic")
    b2 = 1 - lam + lam * lam

    def residual(p):
        big_y = 2 * lam * p[1] - lam + 2
        return lam * (lam - 2) * big_y ** 2 + 4 * lam * b2 * big_y - 4 * b2 * b2 * p[2] ** 2

    return ProjectionConic("X", ((2 - 2 * lam - lam * lam) / (2 * lam * (lam - 2)), 0.), residual)


CASE1_LAMBDAS = (-0.87, -1.4, -1.)


def projection_conic_case1(lam):
    """Projections of C_lambda for the analysed values lambda = -0.87, -1.4, -1."""
    if lam not in CASE1_LAMBDAS:
        raise UnsupportedLambdaError(f"no projection analysis for lambda = {lam:g}, "
                                     f"expected one of {CASE1_LAMBDAS}")
    if lam != -1:
        return [x_projection_conic(lam)]
    return [
        ProjectionConic("X", (0.5, 0.), lambda p: (p[1] - 0.5) ** 2 - 3 * p[2] ** 2 - 1),
        ProjectionConic("Y", None, lambda p: 3 * p[0] ** 4 + 8 * p[0] ** 2 - 64 * p[2] ** 2 - 16),
        ProjectionConic("Z", None, lambda p: p[1] + 3 * p[0] ** 2 / 8),
    ]


def fit_conic_center(points):
    """Center of the conic a u^2 + b uv + c v^2 + d u + e v + f = 0 best fitting the 2D points."""
    points = np.asarray(points, dtype=float)
    shift = points.mean(axis=0)
    scale = points.std(axis=0).max()
    u, v = ((points - shift) / scale).T
    design = np.column_stack([u * u, u * v, v * v, u, v, np.ones_like(u)])
    a, b, c, d, e, _ = np.linalg.svd(design)[2][-1]
    center = np.linalg.solve([[2 * a, b], [b, 2 * c]], [-d, -e])
    return tuple(shift + scale * center)


def limit_distance(lam, t):
    """Distance of C_lambda from the limit curve C_inf at the same parameter."""
    return float(np.linalg.norm(np.subtract(kappa(lam, t), limit_kappa(t))))
