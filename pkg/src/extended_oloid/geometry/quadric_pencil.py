# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    quadric_pencil.py
# @author  extended-oloid contributors
# @date    2026-02-16

"""
The tangential pencil of quadrics inscribed in the extended oloid.

In plane coordinates the family is F_lambda = (1-lambda) F_0 + lambda F_1, where
F_0 and F_1 are the dual cylinders of the circles k_A and k_B. The point equation
of the member Q_lambda is

    f_lambda = x^2/(1-lambda) + (y-lambda+1/2)^2/(1-lambda+lambda^2) + z^2/lambda - 1.

Homogeneous coordinates are numpy arrays [x0, x1, x2, x3] with x = x1/x0 etc.
They may be complex, all other modules work with reals only.
"""

import enum
from typing import NamedTuple

import numpy as np

from .common import DEFAULT_TOL, SQRT3, DegenerateError, DomainError, is_infinite

# the imaginary plane coordinate (sqrt(3)/2) i shared by the complex faces and vertices
S = 0.5j * SQRT3


class QuadricClass(enum.Enum):
    HYPERBOLIC_PARABOLOID = "hyperbolic paraboloid"
    HYPERBOLOID_XY_SPINE = "hyperboloid of one sheet (spine in xy-plane)"
    CIRCLE_KA = "circle k_A"
    ELLIPSOID = "ellipsoid"
    CIRCLE_KB = "circle k_B"
    HYPERBOLOID_YZ_SPINE = "hyperboloid of one sheet (spine in yz-plane)"


def classify(lam):
    if is_infinite(lam):
        return QuadricClass.HYPERBOLIC_PARABOLOID
    if lam < 0:
        return QuadricClass.HYPERBOLOID_XY_SPINE
    if lam == 0:
        return QuadricClass.CIRCLE_KA
    if lam < 1:
        return QuadricClass.ELLIPSOID
    if lam == 1:
        return QuadricClass.CIRCLE_KB
    return QuadricClass.HYPERBOLOID_YZ_SPINE


def _check_regular(lam):
    if lam == 0 or lam == 1:
        raise DegenerateError(f"Q_{lam:g} is a circle, use degenerate_conic_residual")


def _b2(lam):
    return 1 - lam + lam * lam


def f_lambda(lam, p):
    x, y, z = p
    if is_infinite(lam):
        return x * x - z * z + 2 * y
    _check_regular(lam)
    # (y-lam+1/2)^2/b2 - 1 with the cancellation carried out
    return x * x / (1 - lam) + (y * y + y - 0.75 - 2 * lam * y) / _b2(lam) + z * z / lam


def scaled_f_lambda(lam, p):
    """lambda * f_lambda, which stays finite for lambda -> infinity."""
    x, y, z = p
    if is_infinite(lam):
        return -x * x + z * z - 2 * y
    _check_regular(lam)
    return lam * x * x / (1 - lam) + lam * (y * y + y - 0.75 - 2 * lam * y) / _b2(lam) + z * z


def f_lambda_d1(lam, p):
    x, y, z = p
    _check_regular(lam)
    b2 = _b2(lam)
    numer = y * y + y - 0.75 - 2 * lam * y
    return x * x / (1 - lam) ** 2 + (-2 * y * b2 - numer * (2 * lam - 1)) / b2 ** 2 - z * z / lam ** 2


def f_lambda_d2(lam, p):
    return 2 * f_lambda_d2_closed_form(lam, p)


def f_lambda_d2_closed_form(lam, p):
    """Half of the second lambda-derivative, written term by term."""
    x, y, z = p
    _check_regular(lam)
    b2 = _b2(lam)
    y_terms = (3 * y * y * (lam - 1) * lam - y * (2 - 3 * lam - 3 * lam ** 2 + 2 * lam ** 3)
               - 9 * (lam - 1) * lam / 4)
    return x * x / (1 - lam) ** 3 + y_terms / b2 ** 3 + z * z / lam ** 3


def gradient_f_lambda(lam, p):
    x, y, z = p
    _check_regular(lam)
    return np.array([2 * x / (1 - lam), (2 * y + 1 - 2 * lam) / _b2(lam), 2 * z / lam])


def quadric_matrix(lam):
    """Symmetric matrix of the homogenized f_lambda (lambda may be complex)."""
    b2 = _b2(lam)
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = -0.75 / b2
    m[0, 2] = m[2, 0] = (0.5 - lam) / b2
    m[2, 2] = 1 / b2
    m[1, 1] = 1 / (1 - lam)
    m[3, 3] = 1 / lam
    return m


def dual_matrix(lam):
    """Matrix of F_lambda in plane coordinates; equals -4 times the inverse of quadric_matrix."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = 4
    m[0, 2] = m[2, 0] = 2 * (2 * lam - 1)
    m[1, 1] = -4 * (1 - lam)
    m[2, 2] = -3
    m[3, 3] = -4 * lam
    return m


def polar_plane(lam, point):
    _check_regular(lam)
    return quadric_matrix(lam) @ np.asarray(point, dtype=complex)


def tangent_plane(lam, p):
    return polar_plane(lam, [1., *p])


def hom_normalize(v):
    v = np.asarray(v, dtype=complex)
    pivot = v[np.argmax(np.abs(v))]
    if pivot == 0:
        raise DomainError("homogeneous coordinates must not all vanish")
    return v / pivot


def hom_distance(a, b):
    """Scale free distance of two homogeneous elements (0 iff they are equal up to a factor)."""
    a, b = hom_normalize(a), np.asarray(b, dtype=complex)
    pivot = np.argmax(np.abs(a))
    if abs(b[pivot]) <= 1e-300:
        return 1.
    return float(np.max(np.abs(a - b / b[pivot])))


def hom_equal(a, b, tol=DEFAULT_TOL):
    return hom_distance(a, b) <= tol.abs


def degenerate_members():
    """The complex parameters for which the pencil member collapses to a conic."""
    return 0.5 + S, 0.5 - S


def _conic_KA(x0, x1, x2, x3):
    return 3 * x0 * x0 - 4 * x0 * x2 - 4 * x1 * x1 - 4 * x2 * x2, x3


def _conic_KB(x0, x1, x2, x3):
    return 3 * x0 * x0 + 4 * x0 * x2 - 4 * x2 * x2 - 4 * x3 * x3, x1


def _complex_conic(lam, plane_y):
    def residuals(x0, x1, x2, x3):
        return x1 * x1 / (1 - lam) + x3 * x3 / lam - x0 * x0, x2 - plane_y * x0
    return residuals


_CONICS = {
    "KA": _conic_KA,
    "KB": _conic_KB,
    "L1": _complex_conic(0.5 + S, S),
    "L2": _complex_conic(0.5 - S, -S),
}


def degenerate_conic_residual(which, p):
    """Residual of one of the four conics of the pencil, combined with its plane constraint."""
    if which not in _CONICS:
        raise DomainError(f"unknown conic '{which}', expected one of {', '.join(_CONICS)}")
    conic, plane = _CONICS[which](*hom_normalize(p))
    return max(complex(conic), complex(plane), key=abs)


def F0(u):
    u0, u1, u2, _ = u
    return 4 * u0 * u0 - 4 * u0 * u2 - 4 * u1 * u1 - 3 * u2 * u2


def F1(u):
    u0, _, u2, u3 = u
    return 4 * u0 * u0 + 4 * u0 * u2 - 3 * u2 * u2 - 4 * u3 * u3


def dual_cylinder_residual(which, u):
    if which == "A":
        return complex(F0(u))
    if which == "B":
        return complex(F1(u))
    raise DomainError(f"unknown dual cylinder '{which}', expected A or B")


def tangential_pencil_residual(lam, u):
    return complex((1 - lam) * F0(u) + lam * F1(u))


class Tetrahedron(NamedTuple):
    faces: dict
    vertices: dict


# vertex -> the face it does not lie on
OPPOSITE_FACE = {"X_inf": "X1", "Z_inf": "X3", "P": "I2", "Q": "I1"}


def self_polar_tetrahedron():
    faces = {
        "X1": np.array([0, 1, 0, 0], dtype=complex),
        "X3": np.array([0, 0, 0, 1], dtype=complex),
        "I1": np.array([-S, 0, 1, 0], dtype=complex),
        "I2": np.array([S, 0, 1, 0], dtype=complex),
    }
    vertices = {
        "X_inf": np.array([0, 1, 0, 0], dtype=complex),
        "Z_inf": np.array([0, 0, 0, 1], dtype=complex),
        "P": np.array([1, 0, S, 0], dtype=complex),
        "Q": np.array([1, 0, -S, 0], dtype=complex),
    }
    return Tetrahedron(faces, vertices)


def incidence(face, vertex):
    return complex(np.dot(hom_normalize(face), hom_normalize(vertex)))


def polarity_deviation(lam, tetrahedron=None):
    """Largest scale free deviation of the polar plane of each vertex from its opposite face."""
    tetrahedron = tetrahedron or self_polar_tetrahedron()
    return max(hom_distance(polar_plane(lam, v), tetrahedron.faces[OPPOSITE_FACE[name]])
               for name, v in tetrahedron.vertices.items())

