# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    ruling_lines.py
# @author  extended-oloid contributors
# @date    2026-02-25

"""Generating lines shared by the oloid and its ruled inscribed quadrics (lambda outside [0, 1])."""

import math

from .common import Point3, is_infinite, line_through, sgn
from .regression_edge import QUADRANT_SIGNS, check_ruled, phi_inverse_cos, r, regression_asymptote, rho


def t_tilde(lam):
    return math.acos(phi_inverse_cos(lam))


def common_generator_point(m, lam, k=1):
    """Point with parameter m on the common generating line G_k(lambda)."""
    check_ruled(lam)
    sx, sz = QUADRANT_SIGNS[k]
    p = rho(lam)
    w1 = (1 - m) * math.sqrt((lam - 1) * (2 - lam + 2 * p)) / -abs(lam)
    w2 = (1 - m) * (lam - 2 - 2 * p) / (2 * lam) + m * (2 * lam - 1 - p) / (2 * (1 + p))
    w3 = m * sgn(lam) * math.sqrt(lam * (2 - lam + 2 * p)) / (1 + p)
    return Point3(sx * w1, w2, sz * w3)


def common_generators(lam):
    """The four lines G_1..G_4; at infinity they are the asymptotes of the edge of regression."""
    if is_infinite(lam):
        return tuple(regression_asymptote(k) for k in (1, 2, 3, 4))
    return tuple(line_through(common_generator_point(0., lam, k), common_generator_point(1., lam, k))
                 for k in (1, 2, 3, 4))


def m_hat(lam):
    check_ruled(lam)
    p = rho(lam)
    return (1 + p) / (2 - lam + p)


def tangency_points(lam):
    return tuple(r(lam, QUADRANT_SIGNS[k]) for k in (1, 2, 3, 4))
