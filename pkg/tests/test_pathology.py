import math
from fractions import Fraction

import numpy as np
import pytest

from equidist.pathology import (build_scene, fat_cantor, measure_estimate, measure_limit,
                                segment_membership_test, trimmed_convexity)
from oracle_values import SVC_COMMON_DISTANCE, SVC_X0


def test_fat_cantor_steps():
    assert fat_cantor(0).removed == ()
    assert fat_cantor(1).removed == ((Fraction(3, 8), Fraction(5, 8)),)
    assert fat_cantor(1).measure == Fraction(3, 4)
    assert fat_cantor(3).measure == Fraction(9, 16)
    assert measure_limit() == Fraction(1, 2)


def test_fat_cantor_breadth_first():
    removed = fat_cantor(2).removed
    assert removed[0] == (Fraction(3, 8), Fraction(5, 8))
    assert removed[1][1] < removed[0][0] < removed[2][0]


def test_scene_constants():
    scene = build_scene(0)
    assert scene.x0 == pytest.approx(SVC_X0, abs=1e-15)
    assert scene.y0 == pytest.approx(1 + math.sqrt(3) / 2, abs=1e-15)
    assert scene.line_distance_Q1() > scene.R
    assert scene.L_trimmed.chords == []


def test_depth_one_chord_endpoints():
    scene = build_scene(1)
    (a, b), = scene.L_trimmed.chords
    np.testing.assert_allclose(a, scene.arc_point(3 / 8 - 0.5))
    np.testing.assert_allclose(b, scene.arc_point(5 / 8 - 0.5))
    for p in (a, b):
        assert np.linalg.norm(p - scene.Q2) == pytest.approx(scene.R, abs=1e-12)


def test_convex_scene_segment():
    scene = build_scene(0)
    m = segment_membership_test(scene, np.array([0.0]), use_trimmed=False)
    assert m.is_equidistant[0] and abs(m.residual[0]) <= 1e-9
    p = np.array([[scene.x0, 0.0]])
    assert scene.K.distance(p)[0] == pytest.approx(SVC_COMMON_DISTANCE, abs=1e-12)


def test_trimmed_depth_one():
    scene = build_scene(1)
    m = segment_membership_test(scene, np.array([0.0, -0.5]))
    assert not m.is_equidistant[0] and m.residual[0] < 0
    assert m.is_equidistant[1]


def test_depth_three_agreement():
    scene = build_scene(3)
    m = segment_membership_test(scene, np.linspace(-0.5, 0.5, 257))
    assert m.agrees.all()
    assert measure_estimate(scene) == 0.5625


def test_trimmed_boundary_convex():
    assert trimmed_convexity(build_scene(3)).ok
