import math

import numpy as np
import pytest

from equidist import circle
from equidist.circle import (CriticalDomain, alpha, angular_residual, compatibility_residual,
                             critical_domain, derivatives, equidistant_point,
                             hyperbola_tangency_residual, reconstruct_f, trace_curve)
from equidist.errors import CriticalParameterError, NotParameterizationError
from equidist.functions import Exp, Poly1D, Sqrt1p
from equidist.geometry import Ball, Epigraph
from oracle_values import (EXP_T0_S, EXP_T0_X, EXP_T0_Y, EXP_T_PLUS, PAR_T1_S, PAR_T1_X, PAR_T1_Y,
                           PARABOLA_T_PLUS)

PAR = Poly1D([1.0, 0.0, 1.0])


def test_alpha_sqrt1p_closed_form():
    t = np.array([-2.0, -0.5, 0.0, 0.7, 3.0])
    np.testing.assert_allclose(alpha(Sqrt1p(), t), -1 / np.sqrt(2 * t * t + 1), rtol=1e-14)


def test_alpha_examples():
    assert alpha(PAR, 1.0) == 0.0
    assert alpha(Exp(), 0.0) == pytest.approx(-1 / math.sqrt(2), abs=1e-15)


def test_critical_domains():
    assert critical_domain(Sqrt1p(), 0.9) == CriticalDomain(-math.inf, math.inf)
    d = critical_domain(Exp(), 0.5)
    assert d.t_minus == -math.inf
    assert d.t_plus == pytest.approx(EXP_T_PLUS, abs=1e-9)
    d = critical_domain(PAR, 0.5)
    assert d.t_plus == pytest.approx(PARABOLA_T_PLUS, abs=1e-9)
    assert d.t_minus == -d.t_plus


def test_critical_domain_rejects_alpha_at_zero():
    # t^2 - 1 is negative at 0, so alpha(0) = 1 >= R
    with pytest.raises(CriticalParameterError):
        critical_domain(Poly1D([1.0, 0.0, -1.0]), 0.5)


def test_points_on_axis_and_at_t1():
    p = equidistant_point(PAR, 0.5, 0.0)
    assert (p.s, p.x, p.y) == (0.25, 0.0, 0.75)
    p = equidistant_point(PAR, 0.5, 1.0)
    assert p.s == pytest.approx(PAR_T1_S, abs=1e-13)
    assert (p.x, p.y) == pytest.approx((PAR_T1_X, PAR_T1_Y), abs=1e-13)
    assert p.g == pytest.approx(2 / math.sqrt(5), abs=1e-15)


def test_exp_point_at_zero():
    p = equidistant_point(Exp(), 0.5, 0.0)
    assert (p.s, p.x, p.y) == pytest.approx((EXP_T0_S, EXP_T0_X, EXP_T0_Y), abs=1e-14)


def test_critical_parameter_raises():
    with pytest.raises(CriticalParameterError):
        equidistant_point(PAR, 0.5, 1.7)


def test_trace_examples():
    c = trace_curve(Sqrt1p(), 0.9, np.linspace(-3, 3, 121))
    assert len(c) == 121 and np.all(np.diff(c.x) > 0)
    c = trace_curve(PAR, 0.5, np.linspace(-1.6, 1.6, 101))
    assert c.x.min() < -25 and c.x.max() > 25
    c = trace_curve(PAR, 0.5, [0.0])
    assert (c[0].x, c[0].y) == (0.0, 0.75)


def test_oracle_distances_match_s():
    c = trace_curve(Exp(), 0.5, np.linspace(-3, 1.4, 45))
    pts = c.points()
    np.testing.assert_allclose(Ball(0.5).distance(pts), c.s, rtol=1e-12)
    np.testing.assert_allclose(Epigraph(Exp()).distance(pts), c.s, rtol=1e-9)


def test_reconstruct_examples():
    t, fv, fs = reconstruct_f([equidistant_point(PAR, 0.5, 1.0)])
    assert (fv[0], fs[0]) == pytest.approx((2.0, 2.0), abs=1e-12)
    sample = circle.ParamSample(0.0, 0.0, 0.75, 0.25, -1.0, 0.0, 0.75)
    t, fv, fs = reconstruct_f([sample], R=0.5)
    assert (fv[0], fs[0]) == (1.0, 0.0)
    bad = circle.ParamSample(0.0, 5.0, 0.75, 0.25, -1.0, 0.0, 0.75)
    with pytest.raises(NotParameterizationError):
        reconstruct_f([bad])


@pytest.mark.parametrize("f,R,lo,hi", [(Sqrt1p(), 0.9, -3, 3), (Exp(), 0.5, -3, -0.25)])
def test_compatibility_order_two(f, R, lo, hi):
    h = 1e-3
    c = trace_curve(f, R, np.arange(lo, hi, h))
    assert np.max(np.abs(compatibility_residual(c.t, c.x, c.y, R))) <= 1e-6
    assert np.max(np.abs(compatibility_residual(c.t, c.x, 1.01 * c.y, R))) > 1e-3


def test_compatibility_exp_near_critical():
    # x(t) steepens towards t+ ~ 1.512 and the O(h^2) term grows with it
    h = 1e-3
    c = trace_curve(Exp(), 0.5, np.arange(-3, 1.3, h))
    assert np.max(np.abs(compatibility_residual(c.t, c.x, c.y, 0.5))) <= 1e-5
    assert np.max(np.abs(compatibility_residual(c.t, c.x, c.y, 0.5, order=4))) <= 1e-9


def test_angular_examples():
    assert abs(angular_residual(PAR, 0.5, 0.0)) <= 1e-6
    assert abs(angular_residual(Exp(), 0.5, 0.0)) <= 1e-6
    assert abs(angular_residual(Sqrt1p(), 0.9, 1.0)) <= 1e-6


def test_hyperbola_tangency():
    for t in np.linspace(-1.5, 1.5, 13):
        p = equidistant_point(PAR, 0.5, t)
        member, ortho = hyperbola_tangency_residual(p, PAR, 0.5)
        assert member <= 1e-9 and ortho <= 1e-6
    p = equidistant_point(PAR, 0.5, 0.4)
    moved = circle.ParamSample(p.t, p.x, p.y + 0.1, p.s, p.alpha, p.g, p.r)
    assert hyperbola_tangency_residual(moved, PAR, 0.5)[0] > 1e-3


def test_exact_derivatives_against_differences():
    t = np.linspace(-1.5, 1.4, 30)
    dx, dy = derivatives(Exp(), 0.5, t)
    h = 1e-6
    xp, yp = trace_curve(Exp(), 0.5, t + h), trace_curve(Exp(), 0.5, t - h)
    np.testing.assert_allclose(dx, (xp.x - yp.x) / (2 * h), rtol=1e-6)
    np.testing.assert_allclose(dy, (xp.y - yp.y) / (2 * h), rtol=1e-6, atol=1e-8)
