import numpy as np
import pytest

from equidist.errors import PreconditionError
from equidist.functions import Poly1D, ShiftedParabola
from equidist.geometry import Ball
from equidist.minop import min_commute_check, min_family, sandwich_check
from oracle_values import SHIFTED_G_AT_0

FAM = [ShiftedParabola(1.0, 1.0), ShiftedParabola(-1.0, 1.0)]


def test_min_family_values():
    m = min_family(FAM)
    assert m.value(0.0) == 2.0 and m.value(2.0) == 2.0


def test_sandwich_two_parabolas():
    rep = sandwich_check(Ball(0.5), FAM, np.linspace(-2, 2, 41))
    assert rep.ok and not rep.violations


def test_singleton_family_all_equal():
    rep = sandwich_check(Ball(0.5), [Poly1D([1.0, 0.0, 1.0])], np.linspace(-1, 1, 5))
    np.testing.assert_allclose(rep.g_min_minus, rep.member_minus[0], atol=1e-9)
    np.testing.assert_allclose(rep.g_min_plus, rep.member_plus[0], atol=1e-9)


def test_nested_family_is_inert():
    rep = min_commute_check(Ball(0.5), [Poly1D([1.0, 0.0, 1.0]), Poly1D([1.0, 0.0, 3.0])],
                            np.linspace(-1.5, 1.5, 13))
    assert rep.ok
    np.testing.assert_allclose(rep.g_min_minus, rep.member_minus[0], atol=1e-7)


def test_commute_at_symmetric_points():
    rep = min_commute_check(Ball(0.5), FAM, [0.0, 2.0])
    assert rep.ok
    g0 = rep.g_min_minus[0]
    assert g0 == pytest.approx(SHIFTED_G_AT_0, abs=1e-8)
    assert rep.member_minus[0, 0] == pytest.approx(rep.member_minus[1, 0], abs=1e-9)
    # at x = 2 the parabola centred at 1 is nearer and wins
    assert rep.g_min_minus[1] == pytest.approx(rep.member_minus[0, 1], abs=1e-8)


def test_three_members():
    fam = [ShiftedParabola(c, 1.0) for c in (-1.5, 0.0, 1.5)]
    assert min_commute_check(Ball(0.5), fam, np.linspace(-2, 2, 21)).ok


def test_commute_needs_single_roots():
    # on the SVC line a whole segment is equidistant, so G is not single-valued
    from equidist.pathology import build_scene
    scene = build_scene(0)
    fam = [scene.f, ShiftedParabola(scene.x0, 50.0)]
    with pytest.raises(PreconditionError):
        min_commute_check(scene.K, fam, [scene.x0])
