# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    development.py
# @author  extended-oloid contributors
# @date    2026-03-02

"""
Isometric development of the extended oloid onto its tangent plane E along the
ruling L_0 (the eta-axis of E), using the z <= 0 branch of the touching curves.
One period of the development covers t in [-2pi/3, 2pi/3], the next one is
shifted by 4pi/(3 sqrt 3) in xi.
"""

import math
from typing import NamedTuple

import numpy as np
from scipy import integrate

from .common import (FOUR_PI_3, SQRT3, TWO_PI_3, NonMonotoneError, PlanePoint, UnsupportedLambdaError, is_infinite,
                     nonzero, sgn, sqrt_boundary)

XI_PERIOD = 4 * math.pi / (3 * SQRT3)
# boundary parameters t = (2k+1) 2pi/3 belong to the following period
PERIOD_SLACK = 1e-12

_C1 = 2 * SQRT3 / 9
_C2 = SQRT3 / 9


class ArcLength(NamedTuple):
    value: float
    error: float


def _period_index(t):
    return math.floor(3 * abs(t) / (4 * math.pi) + 0.5 + PERIOD_SLACK)


def h_step(t):
    # the period slack may push h just past -2pi/3
    h = t - sgn(t) * _period_index(t) * FOUR_PI_3
    return min(max(h, -TWO_PI_3), TWO_PI_3)


def _period_shift(t):
    return sgn(t) * _period_index(t) * XI_PERIOD


def _arc_term(c, root):
    # arccos(sqrt 2 c / sqrt(1+c)) written as an atan2, exact at the seam 1+2c = 0
    nonzero(1 + c, "1+cos t")
    return math.atan2(math.sqrt(1 - c) * root, math.sqrt(2) * c)


def kappa_tilde(lam, t):
    """Developed touching curve for t in I1, before the period shift and the sign of t are applied."""
    s, c = abs(math.sin(t)), math.cos(t)
    root = sqrt_boundary(1 + 2 * c)
    log_term = math.log(2 / (1 + c))
    if is_infinite(lam):
        k1 = _arc_term(c, root) - 2 * s * math.sqrt(2) * root / (nonzero(c, "cos t") * math.sqrt(1 + c))
        return _C1 * k1, _C2 * (log_term + (7 + 11 * c) / c)
    denom = nonzero(1 + lam * c, "1+lambda cos t")
    k1 = _arc_term(c, root) + (1 - 2 * lam) * s * math.sqrt(2) * root / (denom * math.sqrt(1 + c))
    return _C1 * k1, _C2 * (log_term + (4 + 7 * lam + (11 * lam - 4) * c) / denom)


def dev_special_case(lam, t):
    """
    The closed forms of kappa_tilde for lambda = 0, 1/2 and 1. For lambda = inf
    the eta coordinate uses the tabulated log term ln(2 / sqrt(1+c)), which differs from
    the pointwise limit of kappa_tilde by sqrt(3)/18 ln(1+c).
    """
    s, c = abs(math.sin(t)), math.cos(t)
    root = sqrt_boundary(1 + 2 * c)
    log_term = math.log(2 / (1 + c))
    if is_infinite(lam):
        xi, _ = kappa_tilde(lam, t)
        return xi, _C2 * (math.log(2 / math.sqrt(1 + c)) + (7 + 11 * c) / nonzero(c, "cos t"))
    if lam == 0:
        return (_C1 * (_arc_term(c, root) + math.sqrt(2 * (1 - c)) * root),
                _C2 * (log_term + 4 * (1 - c)))
    if lam == 0.5:
        return _C1 * _arc_term(c, root), _C2 * (log_term + 3 * (5 + c) / (2 + c))
    if lam == 1:
        return (_C1 * (_arc_term(c, root) - s * math.sqrt(2) * root / (1 + c) ** 1.5),
                _C2 * (log_term + (11 + 7 * c) / (1 + c)))
    raise UnsupportedLambdaError(f"no closed form for lambda = {lam:g}, expected 0, 0.5, 1 or inf")


def dev_touching(lam, t):
    h = h_step(t)
    k1, k2 = kappa_tilde(lam, h)
    return PlanePoint(_period_shift(t) + sgn(h) * k1, k2)


def g_tilde(t):
    """Developed edge of regression for t in I1, before the period shift and the sign of t."""
    s, c = abs(math.sin(t)), math.cos(t)
    root = sqrt_boundary(1 + 2 * c)
    nonzero(c, "cos t")
    k1 = _arc_term(c, root) - (2 + 2 * c - c * c) * math.sqrt(2) * root * s / (3 * c * (1 + c) ** 1.5)
    k2 = math.log(2 / (1 + c)) + (7 + 33 * c + 18 * c * c - 4 * c ** 3) / (3 * c * (1 + c))
    return _C1 * k1, _C2 * k2


def dev_regression(t):
    h = h_step(t)
    k1, k2 = g_tilde(h)
    return PlanePoint(_period_shift(t) + sgn(h) * k1, k2)


def dev_ruling(t, m):
    """Developed point with parameter m on the ruling through t (k_A at m = 0, k_B at m = 1)."""
    a, b = np.asarray(dev_touching(0., t)), np.asarray(dev_touching(1., t))
    return PlanePoint(*((1 - m) * a + m * b))


def _arc_length(curve, breakpoints, h_rel, epsrel):
    breakpoints = [float(b) for b in breakpoints]
    if len(breakpoints) < 2 or any(b <= a for a, b in zip(breakpoints, breakpoints[1:])):
        raise NonMonotoneError(f"breakpoints must be strictly increasing, got {breakpoints}")
    total = error = 0.
    for lo, hi in zip(breakpoints, breakpoints[1:]):
        def speed(t):
            # central differences, kept inside [lo, hi]
            h = min(h_rel * (1 + abs(t)), 0.5 * (t - lo), 0.5 * (hi - t))
            return np.linalg.norm(np.subtract(curve(t + h), curve(t - h))) / (2 * h)
        value, abserr = integrate.quad(speed, lo, hi, epsrel=epsrel, limit=200)
        total += value
        error += abserr
    return ArcLength(total, error)


def arc_length_surface(curve, breakpoints, h_rel=1e-6, epsrel=1e-10):
    """Length of a curve t -> Point3 on the surface between the first and the last breakpoint."""
    return _arc_length(curve, breakpoints, h_rel, epsrel)


def arc_length_plane(curve, breakpoints, h_rel=1e-6, epsrel=1e-10):
    """Length of a curve t -> PlanePoint in the development plane."""
    return _arc_length(curve, breakpoints, h_rel, epsrel)
