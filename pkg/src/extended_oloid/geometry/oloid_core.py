# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    oloid_core.py
# @author  extended-oloid contributors
# @date    2026-02-14

"""
The two unit circles k_A (in z=0, center (0,-1/2,0)) and k_B (in x=0, center (0,1/2,0)),
the rulings of the extended oloid joining them and the bookkeeping of the
parameter intervals I1 = [-2pi/3, 2pi/3] and I2 = (2pi/3, 2pi].
"""

import math

import numpy as np
from scipy import integrate

from .common import (FOUR_PI_3, TWO_PI_3, Point3, check_branch, line_through, nonzero,
                     normalize_angle, sqrt_boundary)

GAMMA1 = "Gamma1"
GAMMA2 = "Gamma2"
LOOP_PERIOD = 8 * math.pi / 3


def circle_point_A(t):
    return Point3(math.sin(t), -0.5 - math.cos(t), 0.)


def circle_point_B(t, zb=1):
    check_branch(zb)
    c = math.cos(normalize_angle(t))
    denom = nonzero(1 + c, "1+cos t")
    root = sqrt_boundary(1 + 2 * c)
    return Point3(0., 0.5 - c / denom, zb * root / denom)


def ruling_point(m, t, zb=1):
    a = np.asarray(circle_point_A(t))
    b = np.asarray(circle_point_B(t, zb))
    return Point3(*((1 - m) * a + m * b))


def generating_line(t, zb=1):
    """The ruling through A(t) and B(t) (direction B-A, so m is the line parameter)."""
    return line_through(circle_point_A(t), circle_point_B(t, zb))


def reduce_loop(t):
    """Reduce t to the loop [-2pi/3, 2pi) covering I1 and I2 and name the branch."""
    r = (t + TWO_PI_3) % LOOP_PERIOD - TWO_PI_3
    return r, GAMMA1 if r <= TWO_PI_3 else GAMMA2


def ruling_point_loop(m, t):
    """Both ruling families as one loop: t in I2 uses the mirrored line at 4pi/3 - t."""
    r, branch = reduce_loop(t)
    if branch == GAMMA1:
        return ruling_point(m, r, 1)
    return ruling_point(m, FOUR_PI_3 - r, -1)


def polar_plane_A(x):
    """Gradient (polar plane) of phi_A = 3x0^2 - 4x0x2 - 4x1^2 - 4x2^2 at a point of the plane x3 = 0."""
    x0, x1, x2, _ = x
    return np.array([6 * x0 - 4 * x2, -8 * x1, -4 * x0 - 8 * x2, 0.])


def polar_plane_B(x):
    """Gradient (polar plane) of phi_B = 3x0^2 + 4x0x2 - 4x2^2 - 4x3^2 at a point of the plane x1 = 0."""
    x0, _, x2, x3 = x
    return np.array([6 * x0 + 4 * x2, 0., 4 * x0 - 8 * x2, -8 * x3])


def homogeneous(p):
    return np.array([1., *p])


def _area_element(m, t):
    s, c = math.sin(t), math.cos(t)
    root = math.sqrt(max(1 + 2 * c, 0.))
    alpha = np.array([s, -0.5 - c, 0.])
    beta = np.array([0., 0.5 - c / (1 + c), root / (1 + c)])
    d_alpha = np.array([c, s, 0.])
    d_beta = np.array([0., s / (1 + c) ** 2, s * c / (root * (1 + c) ** 2)])
    return np.linalg.norm(np.cross(beta - alpha, (1 - m) * d_alpha + m * d_beta))


def oloid_surface_area(epsrel=1e-9):
    """Area of the oloid (m in [0,1], t in I1, both z branches) from the ruled surface area element."""
    # four congruent quarters: t -> -t and z -> -z
    quarter, _ = integrate.dblquad(_area_element, 0., TWO_PI_3, 0., 1., epsrel=epsrel)
    return 4 * quarter
