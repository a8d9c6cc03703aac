# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    test_plot.py
# @author  extended-oloid contributors
# @date    2026-03-20

import numpy as np
import pytest

from extended_oloid.frontend import plot
from extended_oloid.geometry import sampling
from extended_oloid.geometry.common import INF, DomainError


def test_parse_window():
    assert plot.parse_window("5") == (-5., -5., 5., 5.)
    assert plot.parse_window("-1,2,-3,4") == (-1., -3., 2., 4.)
    for text in ("1,2", "a", "2,1,0,1"):
        with pytest.raises(DomainError):
            plot.parse_window(text)


def test_clip_polyline():
    parts = plot.clip_polyline(np.array([(-2., 0.), (2., 0.)]), (-1., -1., 1., 1.))
    assert len(parts) == 1
    np.testing.assert_allclose(sorted(map(tuple, parts[0])), [(-1., 0.), (1., 0.)])
    assert plot.clip_polyline(np.array([(5., 5.), (6., 6.)]), (-1., -1., 1., 1.)) == []


def test_clip_polyline_splits():
    points = np.array([(-2., 0.), (0., 3.), (2., 0.)])
    assert len(plot.clip_polyline(points, (-3., -1., 3., 1.))) == 2


def test_check_projection():
    plot.check_projection(["touching", "regression"], "X")
    plot.check_projection(["dev-touching"], "plane")
    with pytest.raises(DomainError):
        plot.check_projection(["dev-touching"], "Z")
    with pytest.raises(DomainError):
        plot.check_projection(["touching"], "plane")


def test_render_is_deterministic(tmp_path):
    frames = [sampling.sample("touching", INF, n=100), sampling.sample("asymptotes", INF, n=10)]
    outputs = []
    for name in ("a.svg", "b.svg"):
        drawn, dropped = plot.render_svg(frames, "X", plot.parse_window("5"), str(tmp_path / name),
                                         dashed=["asymptotes"], title="C_inf")
        assert drawn > 0
        outputs.append((tmp_path / name).read_bytes())
    assert outputs[0] == outputs[1]
    assert b"<svg" in outputs[0]


def test_render_counts_dropped(tmp_path):
    frames = [sampling.sample("generators", 4., t_min=50., t_max=60., n=5)]
    drawn, dropped = plot.render_svg(frames, "Z", plot.parse_window("1"), str(tmp_path / "far.svg"))
    assert drawn == 0 and dropped == 4
