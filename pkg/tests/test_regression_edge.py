# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    test_regression_edge.py
# @author  extended-oloid contributors
# @date    2026-03-16

import math

import numpy as np
import pytest

from extended_oloid.geometry import oloid_core, regression_edge as edge
from extended_oloid.geometry.common import SQRT3, TWO_PI_3, DomainError, PoleError
from extended_oloid.geometry.quadric_pencil import f_lambda, f_lambda_d1, f_lambda_d2
from extended_oloid.geometry.touching_curve import kappa


def test_g_golden_points():
    np.testing.assert_allclose(edge.g(0.), (0., 0., SQRT3 / 2), atol=1e-15)
    np.testing.assert_allclose(edge.g(math.pi / 3), (-SQRT3 / 6, 5 / 9, 8 * math.sqrt(2) / 9), atol=1e-14)
    np.testing.assert_allclose(edge.g(TWO_PI_3), edge.cusps()[0], atol=1e-12)


def test_g_poles_and_domain():
    with pytest.raises(PoleError):
        edge.g(math.pi / 2)
    with pytest.raises(DomainError):
        edge.g(2.5)
    with pytest.raises(DomainError):
        edge.g(0.3, 3)


@pytest.mark.parametrize("t", [-1.8, -0.9, 0.3, 1.2, 1.9])
def test_g_solves_envelope_system(t):
    lam = edge.phi(t)
    for zb in (1, -1):
        p = edge.g(t, zb)
        for f in (f_lambda, f_lambda_d1, f_lambda_d2):
            assert f(lam, p) == pytest.approx(0., abs=1e-8)


def test_g_on_its_ruling():
    for t in (-1.3, 0.4, 1.9):
        np.testing.assert_allclose(oloid_core.ruling_point(edge.regression_parameter(t), t), edge.g(t), atol=1e-12)


def test_phi_and_inverse():
    assert edge.phi(math.pi / 3) == pytest.approx(1.6)
    assert edge.phi_inverse(1.6) == pytest.approx(math.pi / 3)
    assert edge.phi_inverse(1.6, edge.NEG) == pytest.approx(-math.pi / 3)
    for lam in (-5., -1.01, 1.01, 4., 50.):
        assert edge.phi(edge.phi_inverse(lam)) == pytest.approx(lam, rel=1e-10)


def test_phi_inverse_far_out():
    assert edge.phi_inverse(-1e6) == pytest.approx(math.pi / 2 + 5e-7, abs=1e-12)


def test_phi_inverse_errors():
    with pytest.raises(DomainError):
        edge.phi_inverse(0.5)
    with pytest.raises(DomainError):
        edge.phi_inverse(2., "Both")


def test_r_matches_g_and_kappa():
    np.testing.assert_allclose(edge.r(1.6, edge.QuadrantSigns(-1, 1)), edge.g(math.pi / 3), atol=1e-14)
    np.testing.assert_allclose(edge.r(1.6), edge.g(-math.pi / 3), atol=1e-14)
    for lam in (-2., 4.):
        neg = edge.phi_inverse(lam, edge.NEG)
        np.testing.assert_allclose(edge.r(lam), kappa(lam, neg), atol=1e-12)


def test_r_at_two():
    np.testing.assert_allclose(edge.r(2.), (0.537285, 0.866025, 1.519671), atol=1e-6)


def test_r_quadrants():
    p = edge.r(4.)
    np.testing.assert_allclose(edge.r(4., edge.QuadrantSigns(-1, -1)), (-p.x, p.y, -p.z))


def test_regression_asymptotes():
    line = edge.regression_asymptote(1)
    np.testing.assert_allclose(line.base, (-1., -0.5, 0.))
    np.testing.assert_allclose(line.dir, (1., 1., 1.))
    with pytest.raises(DomainError):
        edge.regression_asymptote(0)


def test_asymptote_intersections():
    expected = [(0., 0.5, 1.), (1., -0.5, 0.), (0., 0.5, -1.), (-1., -0.5, 0.)]
    for point, target in zip(edge.asymptote_intersections(), expected):
        np.testing.assert_allclose(point, target, atol=1e-12)


def test_regression_approaches_asymptote():
    line = edge.regression_asymptote(2)
    distances = [line.distance_to(edge.g(math.pi / 2 - eps)) for eps in (1e-2, 1e-4)]
    assert distances[1] < distances[0]
