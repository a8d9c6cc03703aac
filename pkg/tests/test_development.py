# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    test_development.py
# @author  extended-oloid contributors
# @date    2026-03-18

import math

import numpy as np
import pytest

from extended_oloid.geometry import development as dev
from extended_oloid.geometry.common import (FOUR_PI_3, INF, SQRT3, TWO_PI_3, NonMonotoneError, PoleError,
                                            UnsupportedLambdaError)
from extended_oloid.geometry.touching_curve import kappa


def test_h_step():
    assert dev.h_step(0.5) == 0.5
    assert dev.h_step(TWO_PI_3) == pytest.approx(-TWO_PI_3)
    assert dev.h_step(-TWO_PI_3 - 0.1) == pytest.approx(TWO_PI_3 - 0.1)
    assert -TWO_PI_3 <= dev.h_step(TWO_PI_3 - 1e-12) <= TWO_PI_3
    assert -TWO_PI_3 <= dev.h_step(-TWO_PI_3 + 1e-12) <= TWO_PI_3


def test_golden_points():
    np.testing.assert_allclose(dev.dev_touching(0.5, 0.), (0., 2 * SQRT3 / 3), atol=1e-14)
    np.testing.assert_allclose(dev.dev_touching(1., 0.), (0., SQRT3), atol=1e-14)
    assert dev.dev_touching(0., TWO_PI_3).xi == pytest.approx(2 * SQRT3 * math.pi / 9)
    np.testing.assert_allclose(dev.dev_regression(0.), (0., SQRT3), atol=1e-14)
    np.testing.assert_allclose(dev.dev_regression(TWO_PI_3),
                               (2 * SQRT3 * math.pi / 9, SQRT3 / 9 * (math.log(4) + 6)), atol=1e-12)


def test_ruling_l0_on_eta_axis():
    for m in (0., 0.3, 1.):
        np.testing.assert_allclose(dev.dev_ruling(0., m), (0., SQRT3 * m), atol=1e-14)


@pytest.mark.parametrize("lam", [0., 0.5, 1.])
def test_special_cases(lam):
    for t in np.linspace(-TWO_PI_3, TWO_PI_3, 11):
        np.testing.assert_allclose(dev.kappa_tilde(lam, t), dev.dev_special_case(lam, t), atol=1e-12)


def test_special_case_at_seam():
    for t in (TWO_PI_3, -TWO_PI_3, math.nextafter(TWO_PI_3, 4.)):
        np.testing.assert_allclose(dev.kappa_tilde(0., t), dev.dev_special_case(0., t), atol=1e-12)


def test_special_case_tabulated_infinite():
    for t in (-2., -1., 0., 0.4, 1.2, 2.):
        c = math.cos(t)
        tabulated, limit = dev.dev_special_case(INF, t), dev.kappa_tilde(INF, t)
        assert tabulated[0] == limit[0]
        assert tabulated[1] - limit[1] == pytest.approx(SQRT3 / 9 * 0.5 * math.log(1 + c), abs=1e-13)


def test_special_case_unknown():
    with pytest.raises(UnsupportedLambdaError):
        dev.dev_special_case(0.3, 0.)


def test_period_and_symmetry():
    for lam in (0., 0.3, 2., INF):
        a, b = dev.dev_touching(lam, 0.4), dev.dev_touching(lam, 0.4 + FOUR_PI_3)
        assert b.xi - a.xi == pytest.approx(dev.XI_PERIOD, abs=1e-12)
        assert b.eta == pytest.approx(a.eta, abs=1e-12)
        mirrored = dev.dev_touching(lam, -0.4)
        assert mirrored.xi == pytest.approx(-a.xi, abs=1e-15)
        assert mirrored.eta == pytest.approx(a.eta, abs=1e-15)


def test_continuous_at_period_boundary():
    # square-root behaviour at the seam, a step of 1e-12 moves the point by about 1e-6
    seam = dev.dev_touching(0.3, TWO_PI_3)
    for t in (TWO_PI_3 - 1e-12, TWO_PI_3 + 1e-12):
        np.testing.assert_allclose(dev.dev_touching(0.3, t), seam, atol=1e-5)


def test_numpy_parameters():
    for t in np.linspace(-3., 3., 7):
        assert dev.dev_touching(0.5, t) == dev.dev_touching(0.5, float(t))
        assert dev.dev_regression(t) == dev.dev_regression(float(t))
    assert dev.h_step(np.float64(2.5)) == pytest.approx(2.5 - FOUR_PI_3)


def test_infinite_lambda_pole():
    assert math.isfinite(dev.dev_touching(INF, 0.3).xi)
    with pytest.raises(PoleError):
        dev.dev_touching(INF, math.pi / 2)


def test_isometry():
    eps = 1e-3
    breakpoints = [-TWO_PI_3 + eps, 0., TWO_PI_3 - eps]

    def surface(t):
        p = kappa(0.3, t)
        return (p.x, p.y, -p.z)

    on_surface = dev.arc_length_surface(surface, breakpoints)
    in_plane = dev.arc_length_plane(lambda t: dev.dev_touching(0.3, t), breakpoints)
    assert in_plane.value == pytest.approx(on_surface.value, rel=1e-6)


def test_arc_length_of_k_a():
    eps = 1e-3
    arc = dev.arc_length_plane(lambda t: dev.dev_touching(0., t), [-TWO_PI_3 + eps, TWO_PI_3 - eps])
    assert arc.value == pytest.approx(2 * TWO_PI_3 - 2 * eps, abs=1e-6)


def test_arc_length_segment():
    arc = dev.arc_length_plane(lambda t: (3 * t, 4 * t), [0., 1., 2.])
    assert arc.value == pytest.approx(10.)
    assert arc.error < 1e-8


def test_arc_length_needs_increasing_breakpoints():
    with pytest.raises(NonMonotoneError):
        dev.arc_length_plane(lambda t: (t, t), [0., 0.])
    with pytest.raises(NonMonotoneError):
        dev.arc_length_surface(lambda t: (t, t, t), [1.])
