# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    test_quadric_pencil.py
# @author  extended-oloid contributors
# @date    2026-03-15

import math

import numpy as np
import pytest

from extended_oloid.geometry import quadric_pencil as qp
from extended_oloid.geometry.common import INF, SQRT3, DegenerateError, DomainError


@pytest.mark.parametrize("lam, expected", [
    (INF, qp.QuadricClass.HYPERBOLIC_PARABOLOID),
    (-2., qp.QuadricClass.HYPERBOLOID_XY_SPINE),
    (0., qp.QuadricClass.CIRCLE_KA),
    (0.4, qp.QuadricClass.ELLIPSOID),
    (1., qp.QuadricClass.CIRCLE_KB),
    (3., qp.QuadricClass.HYPERBOLOID_YZ_SPINE),
])
def test_classify(lam, expected):
    assert qp.classify(lam) is expected


def test_f_lambda_known_zeros():
    assert qp.f_lambda(0.5, (0., -0.5, SQRT3 / 3)) == pytest.approx(0., abs=1e-15)
    assert qp.f_lambda(INF, (0., 1.5, SQRT3)) == pytest.approx(0., abs=1e-15)
    assert qp.f_lambda(2., (0., 0.5, 2 / SQRT3)) == pytest.approx(0., abs=1e-15)


def test_f_lambda_rejects_circles():
    with pytest.raises(DegenerateError):
        qp.f_lambda(0., (0., 0., 0.))
    with pytest.raises(DegenerateError):
        qp.f_lambda_d1(1., (0., 0., 0.))


def test_scaled_f_lambda():
    p = (0.3, -0.2, 0.7)
    assert qp.scaled_f_lambda(2.5, p) == pytest.approx(2.5 * qp.f_lambda(2.5, p))
    # lambda f_lambda tends to the negated paraboloid
    assert qp.scaled_f_lambda(1e8, p) == pytest.approx(qp.scaled_f_lambda(INF, p), abs=1e-6)


@pytest.mark.parametrize("lam", [-2., 0.3, 3.])
def test_lambda_derivatives(lam):
    p = (0.4, -0.3, 0.6)
    h = 1e-5
    d1 = (qp.f_lambda(lam + h, p) - qp.f_lambda(lam - h, p)) / (2 * h)
    assert qp.f_lambda_d1(lam, p) == pytest.approx(d1, rel=1e-6, abs=1e-8)
    d2 = (qp.f_lambda_d1(lam + h, p) - qp.f_lambda_d1(lam - h, p)) / (2 * h)
    assert qp.f_lambda_d2(lam, p) == pytest.approx(d2, rel=1e-6, abs=1e-8)
    assert qp.f_lambda_d2(lam, p) == pytest.approx(2 * qp.f_lambda_d2_closed_form(lam, p), abs=1e-14)


def test_gradient():
    p, h = np.array([0.2, 0.1, -0.5]), 1e-6
    numeric = [(qp.f_lambda(0.3, p + h * e) - qp.f_lambda(0.3, p - h * e)) / (2 * h) for e in np.eye(3)]
    np.testing.assert_allclose(qp.gradient_f_lambda(0.3, p), numeric, rtol=1e-7)


@pytest.mark.parametrize("lam", [-2., 0.3, 3., 0.5 + 0.5j])
def test_dual_matrix_is_scaled_inverse(lam):
    np.testing.assert_allclose(qp.dual_matrix(lam) @ qp.quadric_matrix(lam), -4 * np.eye(4), atol=1e-12)


def test_tangent_plane_in_tangential_pencil():
    lam = 0.3
    p = (math.sqrt(1 - lam) * 0.6, lam - 0.5, math.sqrt(lam) * 0.8)
    assert qp.f_lambda(lam, p) == pytest.approx(0., abs=1e-14)
    u = qp.hom_normalize(qp.tangent_plane(lam, p))
    assert abs(qp.tangential_pencil_residual(lam, u)) < 1e-12


@pytest.mark.parametrize("lam", [-2., 0.3, 3., 0.5 + 0.5j])
def test_dual_matrix_is_tangential_pencil(lam):
    for u in ([1, 0.2, -0.4, 0.9], [0.3, -1, 0.5, 0.1j]):
        u = np.asarray(u, dtype=complex)
        assert u @ qp.dual_matrix(lam) @ u == pytest.approx(qp.tangential_pencil_residual(lam, u), abs=1e-13)


def test_hom_distance():
    assert qp.hom_distance([1, 2, 3, 4], [-2, -4, -6, -8]) == pytest.approx(0.)
    assert qp.hom_distance([1, 0, 0, 0], [0, 1, 0, 0]) == 1.
    assert qp.hom_equal([0, 1j, 0, 0], [0, 3, 0, 0])
    with pytest.raises(DomainError):
        qp.hom_normalize([0, 0, 0, 0])


@pytest.mark.parametrize("which, u", [
    ("A", [1, 2 / SQRT3, -2 / 3, 0.7]),
    ("A", [1, 0, 2 / 3, 5]),
    ("B", [1, -7, 2, 0]),
])
def test_dual_cylinder_examples(which, u):
    assert abs(qp.dual_cylinder_residual(which, u)) < 1e-12


def test_dual_cylinder_unknown():
    with pytest.raises(DomainError):
        qp.dual_cylinder_residual("C", [1, 0, 0, 0])


def test_degenerate_members():
    lam1, lam2 = qp.degenerate_members()
    assert lam1 + lam2 == pytest.approx(1.)
    # 1 - lambda + lambda^2 vanishes there
    assert abs(1 - lam1 + lam1 * lam1) < 1e-15


def test_degenerate_conics():
    lam1, _ = qp.degenerate_members()
    assert abs(qp.degenerate_conic_residual("KA", [1, SQRT3 / 2, 0, 0])) < 1e-15
    assert abs(qp.degenerate_conic_residual("KB", [1, 0, 0, SQRT3 / 2])) < 1e-15
    assert abs(qp.degenerate_conic_residual("L1", [1, np.sqrt(1 - lam1), qp.S, 0])) < 1e-12
    # a point off the plane of k_A
    assert abs(qp.degenerate_conic_residual("KA", [1, SQRT3 / 2, 0, 1])) == pytest.approx(1.)
    with pytest.raises(DomainError):
        qp.degenerate_conic_residual("L3", [1, 0, 0, 0])


def test_self_polar_tetrahedron():
    tetrahedron = qp.self_polar_tetrahedron()
    for name, vertex in tetrahedron.vertices.items():
        opposite = qp.OPPOSITE_FACE[name]
        for face_name, face in tetrahedron.faces.items():
            if face_name != opposite:
                assert abs(qp.incidence(face, vertex)) < 1e-15
        assert abs(qp.incidence(tetrahedron.faces[opposite], vertex)) > 0.1


@pytest.mark.parametrize("lam", [-3., 0.7, 4., 2 + 1j])
def test_polarity(lam):
    assert qp.polarity_deviation(lam) < 1e-12
