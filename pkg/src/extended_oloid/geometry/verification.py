# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    verification.py
# @author  extended-oloid contributors
# @date    2026-03-09

"""
Numerical verification suites. Every suite returns a list of Check rows with the
largest residual found and the limit it has to stay below. Limits given as plain
numbers are fixed, the others follow the Tolerance passed in.
"""

import math
from typing import NamedTuple

import numpy as np
import pandas as pd

from . import development, oloid_core, quadric_pencil, regression_edge, ruling_lines, touching_curve
from .common import DEFAULT_TOL, FOUR_PI_3, INF, SQRT3, TWO_PI_3, Benchmarker, OloidError, window_distance
from .oloid_core import GAMMA1, GAMMA2
from .quadric_pencil import f_lambda, f_lambda_d1, f_lambda_d2
from .regression_edge import NEG, POS, QUADRANT_SIGNS


class Check(NamedTuple):
    suite: str
    name: str
    residual: float
    limit: float

    @property
    def passed(self):
        return bool(self.residual <= self.limit)


TANGENCY_LAMBDAS = (-3., -1.4, -0.5, 0.2, 0.3, 0.5, 0.8, 1.5, 2., 4., 10.)
PHI_LAMBDAS = (-5., -2., -1.01, 1.01, 1.6, 4., 50.)
RULED_LAMBDAS = (-3., -1.5, 1.3, 2., 4., 25.)
POLARITY_LAMBDAS = (-3., -0.5, 0.3, 0.7, 4.)
ISOMETRY_LAMBDAS = (0., 0.3, 0.5, 0.7, 1.)
DERIVATIVE_LAMBDAS = (-3., -0.5, 0.3, 0.5, 2., 4.)
FD_STEP = 1e-5
# samples closer to a pole than this (measured in 1+lambda cos t) are skipped
POLE_MARGIN = 0.2


def _dist(p, q):
    return float(np.max(np.abs(np.subtract(p, q))))


def _size(*points):
    return max(1., *(float(np.max(np.abs(p))) for p in points))


def _unit_box(count=5):
    axis = np.linspace(-1, 1, count)
    return [tuple(p) for p in np.array(np.meshgrid(axis, axis, axis)).reshape(3, -1).T]


def _loop_samples(lam, count=40):
    """(t, u, zb) on the loop with u the I1 parameter of the ruling and zb its z branch."""
    for t in np.linspace(-TWO_PI_3, 2 * math.pi, count, endpoint=False):
        r, branch = oloid_core.reduce_loop(t)
        u, zb = (r, 1) if branch == GAMMA1 else (FOUR_PI_3 - r, -1)
        c = math.cos(u)
        if abs(1 + lam * c if math.isfinite(lam) else c) >= POLE_MARGIN:
            yield float(t), u, zb


def suite_golden(tol=DEFAULT_TOL):
    half = SQRT3 / 2
    expected = [
        ("Z1(-1)", touching_curve.axis_point(-1., "Z1"), (2 / SQRT3, -0.5, 0.)),
        ("X1(2)", touching_curve.axis_point(2., "X1"), (0., 0.5, 2 / SQRT3)),
        ("X1(inf)", touching_curve.axis_point(INF, "X1"), (0., 1.5, SQRT3)),
        ("Z2(inf)", touching_curve.axis_point(INF, "Z2"), (-SQRT3, -1.5, 0.)),
        ("gamma(2, 0)", touching_curve.gamma(2., 0.).point, (0., 0.5, 2 / SQRT3)),
        ("gamma(inf, 0)", touching_curve.gamma(INF, 0.).point, (0., 1.5, SQRT3)),
        ("A(2pi/3)", oloid_core.circle_point_A(TWO_PI_3), (half, 0., 0.)),
        ("B(0)", oloid_core.circle_point_B(0.), (0., 0., half)),
        ("ruling at -pi/2", oloid_core.ruling_point(0.25, -math.pi / 2), (-0.75, -0.25, 0.25)),
        ("g(0)", regression_edge.g(0.), (0., 0., half)),
        ("g(2pi/3)", regression_edge.g(TWO_PI_3), (half, 0., 0.)),
        ("g(-2pi/3)", regression_edge.g(-TWO_PI_3), (-half, 0., 0.)),
    ]
    intersections = regression_edge.asymptote_intersections()
    targets = [(0., 0.5, 1.), (1., -0.5, 0.), (0., 0.5, -1.), (-1., -0.5, 0.)]
    expected += zip(("S12", "S23", "S34", "S41"), intersections, targets)
    expected += zip(("cusp +x", "cusp -x", "cusp +z", "cusp -z"), regression_edge.cusps(),
                    [(half, 0., 0.), (-half, 0., 0.), (0., 0., half), (0., 0., -half)])
    checks = [Check("golden", name, _dist(value, target), 1e-12) for name, value, target in expected]
    zeros = [(0.5, (0., -0.5, SQRT3 / 3)), (INF, (0., 1.5, SQRT3)), (2., (0., 0.5, 2 / SQRT3))]
    checks.append(Check("golden", "f_lambda zeros", max(abs(f_lambda(lam, p)) for lam, p in zeros), 1e-12))
    return checks


def suite_tangency(tol=DEFAULT_TOL):
    f_res = d1_res = disc_res = root_res = member_res = mirror_res = plane_res = seam_res = 0.
    size = 1.
    for lam in TANGENCY_LAMBDAS:
        for t, u, zb in _loop_samples(lam):
            p = touching_curve.gamma(lam, t).point
            f_res = max(f_res, abs(f_lambda(lam, p)))
            d1_res = max(d1_res, abs(f_lambda_d1(lam, p)))
            a, b, c = touching_curve.ruling_quadratic(lam, u, zb)
            disc_res = max(disc_res, abs(b * b - 4 * a * c) / max(1., b * b, abs(4 * a * c)))
            if abs(a) > 1e-6:
                m = touching_curve.psi(lam, u)
                root_res = max(root_res, abs(-b / (2 * a) - m) / max(1., abs(m)))
            q = touching_curve.touching_ruling_point(lam, t)
            member_res = max(member_res, _dist(p, q))
            size = max(size, _size(p))
            k = touching_curve.kappa(lam, u)
            mirror_res = max(mirror_res, _dist(touching_curve.kappa(lam, -u), (-k.x, k.y, k.z)))
            plane = quadric_pencil.hom_normalize(quadric_pencil.tangent_plane(lam, p))
            plane_res = max(plane_res, abs(quadric_pencil.tangential_pencil_residual(lam, plane)))
        if -1 < lam < 2:
            branch = touching_curve.gamma_branch
            seam_res = max(seam_res,
                           _dist(branch(lam, TWO_PI_3, GAMMA2), branch(lam, TWO_PI_3, GAMMA1)),
                           _dist(branch(lam, 2 * math.pi, GAMMA2), branch(lam, -TWO_PI_3, GAMMA1)))
    limit_res = 0.
    for p in _unit_box():
        target = quadric_pencil.scaled_f_lambda(INF, p)
        for lam in (1e8, -1e8):
            limit_res = max(limit_res, abs(quadric_pencil.scaled_f_lambda(lam, p) - target))
    return [
        Check("tangency", "max |f_lambda(gamma)|", f_res, 1e-9),
        Check("tangency", "max |f'_lambda(gamma)|", d1_res, 1e-9),
        Check("tangency", "double root discriminant (scaled)", disc_res, 1e-9),
        Check("tangency", "double root vs psi", root_res, 1e-9),
        Check("tangency", "gamma on its ruling", member_res, tol.limit(size)),
        Check("tangency", "x mirror symmetry", mirror_res, tol.limit(size)),
        Check("tangency", "tangent planes in the pencil", plane_res, 1e-9),
        Check("tangency", "seam closure", seam_res, 1e-12),
        Check("tangency", "lambda f_lambda at +-1e8", limit_res, 1e-6),
    ]


def _czuber_parameters(count=60):
    ts = np.linspace(0.05, TWO_PI_3 - 0.05, count + 4)
    return [float(t) for t in ts if abs(t - math.pi / 2) >= 0.05][:count]


def suite_czuber(tol=DEFAULT_TOL):
    residuals = [0., 0., 0.]
    for t0 in _czuber_parameters():
        for t in (t0, -t0):
            lam = regression_edge.phi(t)
            for zb in (1, -1):
                p = regression_edge.g(t, zb)
                for i, f in enumerate((f_lambda, f_lambda_d1, f_lambda_d2)):
                    residuals[i] = max(residuals[i], abs(f(lam, p)))
    equivalence = round_trip = 0.
    size = 1.
    for lam in PHI_LAMBDAS:
        neg, pos = regression_edge.phi_inverse(lam, NEG), regression_edge.phi_inverse(lam, POS)
        r = regression_edge.r(lam)
        size = max(size, _size(r))
        equivalence = max(equivalence,
                          _dist(r, touching_curve.kappa(lam, neg)),
                          _dist(r, regression_edge.g(neg)),
                          _dist(regression_edge.r(lam, regression_edge.QuadrantSigns(-1, 1)),
                                touching_curve.kappa(lam, pos)))
        round_trip = max(round_trip, *(abs(regression_edge.phi(t) - lam) / abs(lam) for t in (neg, pos)))
    on_ruling = 0.
    ratio = 0.
    for t in (0.4, 1.0, 1.9):
        p = regression_edge.g(t)
        on_ruling = max(on_ruling, _dist(p, oloid_core.ruling_point(regression_edge.regression_parameter(t), t)))
        line = oloid_core.generating_line(t)
        far, near = (max(line.distance_to(regression_edge.g(t + s * h)) for s in (1, -1)) for h in (1e-2, 1e-3))
        ratio = max(ratio, near / far)
    cusp = _dist(regression_edge.g(TWO_PI_3 - 1e-4), regression_edge.cusps()[0])
    return [
        Check("czuber", "max |f| at (phi(t), g(t))", residuals[0], 1e-8),
        Check("czuber", "max |f'| at (phi(t), g(t))", residuals[1], 1e-8),
        Check("czuber", "max |f''| at (phi(t), g(t))", residuals[2], 1e-8),
        Check("czuber", "g / r / kappa equivalence", equivalence, tol.limit(size)),
        Check("czuber", "phi(phi^-1(lambda)) relative", round_trip, tol.rel),
        Check("czuber", "g on the ruling", on_ruling, tol.limit()),
        Check("czuber", "ruling tangent to R (distance ratio)", ratio, 0.02),
        Check("czuber", "cusp limit at 2pi/3", cusp, 1e-3),
    ]


def _line_points(line, params=(-1., 0., 0.5, 1., 2.)):
    return [line.point_at(m) for m in params]


def suite_ruled(tol=DEFAULT_TOL):
    on_quadric = on_oloid = czuber = on_line = m_hat = parallel = 0.
    size = 1.
    for lam in RULED_LAMBDAS:
        t_tilde = ruling_lines.t_tilde(lam)
        candidates = [oloid_core.generating_line(t, zb) for t in (t_tilde, -t_tilde) for zb in (1, -1)]
        lines = ruling_lines.common_generators(lam)
        for k, line in enumerate(lines, 1):
            points = _line_points(line)
            on_quadric = max(on_quadric, *(abs(f_lambda(lam, p)) / _size(p) ** 2 for p in points))
            on_oloid = max(on_oloid, min(max(c.distance_to(p) for p in points) for c in candidates))
            tangency = regression_edge.r(lam, QUADRANT_SIGNS[k])
            scale = _size(tangency) ** 2
            czuber = max(czuber, *(abs(f(lam, tangency)) / scale for f in (f_lambda, f_lambda_d1, f_lambda_d2)))
            on_line = max(on_line, line.distance_to(tangency))
            point = ruling_lines.common_generator_point(ruling_lines.m_hat(lam), lam, k)
            m_hat = max(m_hat, _dist(point, tangency))
            size = max(size, _size(tangency))
        direction = np.asarray(lines[0].dir)
        tangent = np.asarray(touching_curve.kappa_dot(lam, -t_tilde))
        parallel = max(parallel, float(np.linalg.norm(np.cross(direction, tangent))
                                       / (np.linalg.norm(direction) * np.linalg.norm(tangent))))
    limit = max(window_distance(line, far)
                for line, far in zip(ruling_lines.common_generators(INF), ruling_lines.common_generators(1e6)))
    return [
        Check("ruled", "G_k on Q_lambda", on_quadric, 1e-9),
        Check("ruled", "G_k on the oloid", on_oloid, 1e-9),
        Check("ruled", "P_k on R and C_lambda", czuber, 1e-9),
        Check("ruled", "P_k on G_k", on_line, tol.limit(size)),
        Check("ruled", "G_k(m_hat) = P_k", m_hat, tol.limit(size)),
        Check("ruled", "G_1 tangent to C_lambda", parallel, 1e-9),
        Check("ruled", "G_k(1e6) -> G_k(inf)", limit, 1e-4),
    ]


def suite_asymptotes(tol=DEFAULT_TOL):
    checks = []
    distances = {}
    for lam in (1e3, 1e5):
        distances[lam] = max(window_distance(regression_edge.regression_asymptote(k), touching_curve.asymptote(lam, k))
                             for k in (1, 2, 3, 4))
        checks.append(Check("asymptotes", f"A_k({lam:g}) -> A~_k (times lambda/10)", distances[lam] * lam / 10, 1.))
    checks.append(Check("asymptotes", "distance decreasing in lambda", distances[1e5] / distances[1e3], 1.))
    t1 = touching_curve.poles(4.).t1
    lines = [touching_curve.asymptote(4., k) for k in (1, 2, 3, 4)]
    approach = [min(line.distance_to(touching_curve.kappa(4., t1 - eps)) for line in lines)
                for eps in (1e-2, 1e-3, 1e-4)]
    checks.append(Check("asymptotes", "C_4 approaches A_k(4) (ratio)",
                        max(b / a for a, b in zip(approach, approach[1:])), 0.5))
    checks.append(Check("asymptotes", "C_4 distance at 1e-4 from the pole", approach[-1], 1e-2))
    plane_points = 0.
    for lam in (0.3, 4.):
        for t in np.linspace(0.2, 1.5, 8):
            line = touching_curve.tangent_line(lam, t)
            points = touching_curve.asymptote_plane_points(lam, t)
            plane_points = max(plane_points, *(line.distance_to(p) / _size(p) for p in points))
    checks.append(Check("asymptotes", "tangent meets x = 0 and z = 0 at the plane points", plane_points, 1e-10))
    far = max(touching_curve.limit_distance(1e7, t) for t in np.linspace(-TWO_PI_3, TWO_PI_3, 41)
              if abs(math.cos(t)) >= POLE_MARGIN)
    checks.append(Check("asymptotes", "kappa(1e7) -> kappa*", far, 1e-5))
    return checks


def suite_projection(tol=DEFAULT_TOL):
    inf_res = 0.
    for t, _, _ in _loop_samples(INF, 100):
        inf_res = max(inf_res, *map(abs, touching_curve.projection_residuals_inf(touching_curve.gamma(INF, t).point)))
    checks = [Check("projection", "C_inf projections", inf_res, 1e-10)]
    conics = touching_curve.projection_conic_case1(-1.)
    case_res = {conic.plane: 0. for conic in conics}
    for t, _, _ in _loop_samples(-1., 100):
        p = touching_curve.gamma(-1., t).point
        for conic in conics:
            case_res[conic.plane] = max(case_res[conic.plane], abs(conic.residual(p)))
    checks += [Check("projection", f"C_-1 onto {plane}", value, 1e-9) for plane, value in case_res.items()]
    for lam in (-0.87, -1.4):
        (conic,) = touching_curve.projection_conic_case1(lam)
        points = [touching_curve.gamma(lam, t).point for t, _, _ in _loop_samples(lam, 100)]
        residual = max(abs(conic.residual(p)) / _size(p) ** 2 for p in points)
        checks.append(Check("projection", f"C_{lam:g} on its X conic", residual, 1e-9))
        center = touching_curve.fit_conic_center([(p.y, p.z) for p in points])
        checks.append(Check("projection", f"C_{lam:g} fitted center", _dist(center, conic.center), 1e-6))
    return checks


def suite_self_polar(tol=DEFAULT_TOL):
    tetrahedron = quadric_pencil.self_polar_tetrahedron()
    incidence = max(abs(quadric_pencil.incidence(face, vertex))
                    for name, vertex in tetrahedron.vertices.items()
                    for face_name, face in tetrahedron.faces.items()
                    if face_name != quadric_pencil.OPPOSITE_FACE[name])
    polarity = max(quadric_pencil.polarity_deviation(lam, tetrahedron) for lam in POLARITY_LAMBDAS)
    mismatched = sum(not quadric_pencil.hom_equal(quadric_pencil.polar_plane(lam, vertex),
                                                  tetrahedron.faces[quadric_pencil.OPPOSITE_FACE[name]], tol)
                     for lam in POLARITY_LAMBDAS for name, vertex in tetrahedron.vertices.items())
    on_dual = dual_form = 0.
    for lam in POLARITY_LAMBDAS:
        dual = quadric_pencil.dual_matrix(lam)
        for t, _, _ in _loop_samples(lam, 12):
            u = quadric_pencil.hom_normalize(quadric_pencil.tangent_plane(lam, touching_curve.gamma(lam, t).point))
            value = u @ dual @ u
            on_dual = max(on_dual, abs(value))
            dual_form = max(dual_form, abs(value - quadric_pencil.tangential_pencil_residual(lam, u)))
    duality = 0.
    for t in np.linspace(-TWO_PI_3, TWO_PI_3, 25):
        plane_a = oloid_core.polar_plane_A(oloid_core.homogeneous(oloid_core.circle_point_A(t)))
        plane_b = oloid_core.polar_plane_B(oloid_core.homogeneous(oloid_core.circle_point_B(t)))
        duality = max(duality,
                      abs(quadric_pencil.dual_cylinder_residual("A", quadric_pencil.hom_normalize(plane_a))),
                      abs(quadric_pencil.dual_cylinder_residual("B", quadric_pencil.hom_normalize(plane_b))))
    lam1, lam2 = quadric_pencil.degenerate_members()
    conic_res = max(abs(quadric_pencil.degenerate_conic_residual(which, p)) for which, p in (
        ("KA", [1, SQRT3 / 2, 0, 0]),
        ("KB", [1, 0, 0, SQRT3 / 2]),
        ("L1", [1, np.sqrt(1 - lam1), quadric_pencil.S, 0]),
        ("L2", [1, np.sqrt(1 - lam2), -quadric_pencil.S, 0]),
    ))
    pencil = 0.
    for theta in np.linspace(0, 2 * math.pi, 13):
        x0, z0 = np.sqrt(1 - lam1) * math.cos(theta), np.sqrt(lam1) * math.sin(theta)
        u = [-1, x0 / (1 - lam1), 0, z0 / lam1]
        pencil = max(pencil, abs(quadric_pencil.tangential_pencil_residual(lam1, u)))
    return [
        Check("self_polar", "vertex / face incidence", incidence, 1e-12),
        Check("self_polar", "polar of each vertex is the opposite face", polarity, tol.limit()),
        Check("self_polar", "vertices whose polar is not the opposite face", mismatched, 0),
        Check("self_polar", "tangent planes of C_lambda on the dual quadric", on_dual, 1e-9),
        Check("self_polar", "dual matrix against the tangential pencil", dual_form, tol.limit()),
        Check("self_polar", "polars of k_A, k_B on the dual cylinders", duality, tol.limit()),
        Check("self_polar", "degenerate conics", conic_res, tol.limit()),
        Check("self_polar", "tangent planes of L1 in the pencil", pencil, tol.limit()),
    ]


def _developed_surface_curve(lam):
    # the development uses the z <= 0 branch
    def curve(t):
        p = touching_curve.kappa(lam, t)
        return (p.x, p.y, -p.z)
    return curve


def suite_development(tol=DEFAULT_TOL):
    grid = np.linspace(-TWO_PI_3, TWO_PI_3, 50)
    special = max(_dist(development.kappa_tilde(lam, t), development.dev_special_case(lam, t))
                  for lam in (0., 0.5, 1.) for t in grid)
    checks = [Check("development", "special cases 0, 1/2, 1", special, 1e-12)]
    tabulated = max(abs(development.dev_special_case(INF, t)[1] - development.kappa_tilde(INF, t)[1]
                        - SQRT3 / 18 * math.log(1 + math.cos(t))) for t in grid)
    checks.append(Check("development", "tabulated lambda=inf eta offset", tabulated, 1e-12))
    eps = 1e-3
    breakpoints = [-TWO_PI_3 + eps, 0., TWO_PI_3 - eps]
    isometry = 0.
    for lam in ISOMETRY_LAMBDAS:
        surface = development.arc_length_surface(_developed_surface_curve(lam), breakpoints)
        plane = development.arc_length_plane(lambda t, lam=lam: development.dev_touching(lam, t), breakpoints)
        isometry = max(isometry, abs(surface.value - plane.value) / surface.value)
    checks.append(Check("development", "isometry (relative)", isometry, 1e-6))
    arc = development.arc_length_plane(lambda t: development.dev_touching(0., t), breakpoints)
    checks.append(Check("development", "C*_0 arc length", abs(arc.value - (2 * TWO_PI_3 - 2 * eps)), 1e-6))
    ruling = development.arc_length_plane(lambda m: development.dev_ruling(0., m), [0., 1.])
    checks.append(Check("development", "developed L_0 length", abs(ruling.value - SQRT3), 1e-6))
    inner = np.linspace(-TWO_PI_3 + 0.05, TWO_PI_3 - 0.05, 30)
    period = odd = 0.
    for lam in ISOMETRY_LAMBDAS:
        for t in inner:
            a, b = development.dev_touching(lam, t), development.dev_touching(lam, t + FOUR_PI_3)
            period = max(period, abs(b.xi - a.xi - development.XI_PERIOD), abs(b.eta - a.eta))
            mirrored = development.dev_touching(lam, -t)
            odd = max(odd, abs(mirrored.xi + a.xi), abs(mirrored.eta - a.eta))
        ends = development.dev_touching(lam, TWO_PI_3).xi - development.dev_touching(lam, -TWO_PI_3).xi
        period = max(period, abs(ends - development.XI_PERIOD))
    checks.append(Check("development", "xi period 4pi/(3 sqrt 3)", period, 1e-12))
    checks.append(Check("development", "xi odd, eta even", odd, 1e-12))
    golden = max(_dist(development.dev_touching(0.5, 0.), (0., 2 * SQRT3 / 3)),
                 _dist(development.dev_touching(1., 0.), (0., SQRT3)),
                 abs(development.dev_touching(0., TWO_PI_3).xi - 2 * SQRT3 * math.pi / 9),
                 _dist(development.dev_regression(0.), (0., SQRT3)))
    checks.append(Check("development", "developed golden points", golden, 1e-9))
    return checks


def suite_area(tol=DEFAULT_TOL):
    area = oloid_core.oloid_surface_area()
    return [Check("area", "oloid surface area / 4pi - 1", abs(area / (4 * math.pi) - 1), 1e-4)]


def _central_difference(f, x, h=FD_STEP):
    return (np.asarray(f(x + h)) - np.asarray(f(x - h))) / (2 * h)


def suite_derivatives(tol=DEFAULT_TOL):
    kappa_res = normal_res = loop_res = 0.
    grid = np.linspace(-TWO_PI_3 + 0.1, TWO_PI_3 - 0.1, 15)
    for lam in DERIVATIVE_LAMBDAS:
        for t in grid:
            if abs(1 + lam * math.cos(t)) < POLE_MARGIN:
                continue
            exact = np.asarray(touching_curve.kappa_dot(lam, t))
            numeric = _central_difference(lambda u: touching_curve.kappa(lam, u), t)
            kappa_res = max(kappa_res, _dist(exact, numeric) / _size(exact))
            normal = quadric_pencil.gradient_f_lambda(lam, touching_curve.kappa(lam, t))
            normal_res = max(normal_res, abs(normal @ exact) / (np.linalg.norm(normal) * np.linalg.norm(exact)))
        for t, u, _ in _loop_samples(lam, 24):
            if 1 + 2 * math.cos(u) < 0.1:
                continue
            exact = np.asarray(touching_curve.gamma_dot(lam, t))
            numeric = _central_difference(lambda u: touching_curve.gamma(lam, u).point, t)
            loop_res = max(loop_res, _dist(exact, numeric) / _size(exact))
    for t in grid:
        if abs(math.cos(t)) >= POLE_MARGIN:
            exact = np.asarray(touching_curve.limit_kappa_dot(t))
            kappa_res = max(kappa_res, _dist(exact, _central_difference(touching_curve.limit_kappa, t)) / _size(exact))
    d1_res = d2_res = 0.
    for p in _unit_box(3):
        for lam in DERIVATIVE_LAMBDAS:
            d1 = f_lambda_d1(lam, p)
            d1_res = max(d1_res, abs(d1 - _central_difference(lambda mu: f_lambda(mu, p), lam)) / max(1., abs(d1)))
            d2 = f_lambda_d2(lam, p)
            d2_res = max(d2_res, abs(d2 - _central_difference(lambda mu: f_lambda_d1(mu, p), lam)) / max(1., abs(d2)))
    return [
        Check("derivatives", "kappa_dot vs central differences", kappa_res, 1e-6),
        Check("derivatives", "gamma_dot on the loop vs central differences", loop_res, 1e-6),
        Check("derivatives", "kappa_dot tangent to Q_lambda", normal_res, 1e-9),
        Check("derivatives", "f'_lambda vs central differences", d1_res, 1e-6),
        Check("derivatives", "f''_lambda vs central differences of f'", d2_res, 1e-6),
    ]


SUITES = {
    "golden": suite_golden,
    "tangency": suite_tangency,
    "czuber": suite_czuber,
    "ruled": suite_ruled,
    "asymptotes": suite_asymptotes,
    "projection": suite_projection,
    "self_polar": suite_self_polar,
    "development": suite_development,
    "area": suite_area,
    "derivatives": suite_derivatives,
}


def run_suite(name, tol=DEFAULT_TOL, verbose=0):
    if name not in SUITES:
        raise KeyError(name)
    with Benchmarker(verbose, f"suite {name}"):
        try:
            return SUITES[name](tol)
        except OloidError as error:
            return [Check(name, f"evaluation failed: {error}", math.inf, 0.)]
        except Exception as error:
            return [Check(name, f"evaluation crashed: {type(error).__name__}: {error}", math.inf, 0.)]


def run_all(tol=DEFAULT_TOL, verbose=0):
    checks = []
    for name in SUITES:
        checks += run_suite(name, tol, verbose)
    return checks


def report(checks):
    df = pd.DataFrame([c._asdict() for c in checks], columns=list(Check._fields))
    df["passed"] = [c.passed for c in checks]
    return df
