"""Property-based checks of the geometric invariants."""
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from equidist import circle, sphere
from equidist.characterize import curve_to_G, h_map
from equidist.functions import Exp, PointwiseMin, Poly1D, ShiftedParabola, Sqrt1p
from equidist.geometry import Ball, Epigraph, PointCloud, equidistant_residual, hausdorff
from equidist.pathology import fat_cantor
from equidist.vertical import scan_vertical

coord = st.floats(-5, 5, allow_nan=False)
point = st.tuples(coord, coord).map(np.array)
CASES = {
    "sqrt": (Sqrt1p(), 0.9),
    "exp": (Exp(), 0.5),
    "par": (Poly1D([1.0, 0.0, 1.0]), 0.5),
    "shifted": (ShiftedParabola(0.5, 1.0), 0.5),
}
case = st.sampled_from(sorted(CASES))


def sets():
    return [Ball(0.9), Epigraph(Sqrt1p()), Epigraph(Exp()), Epigraph(Poly1D([1.0, 0.0, 1.0])),
            PointCloud([[0.0, 0.0], [1.0, -1.0], [-2.0, 0.5]])]


def admissible_t(name, u):
    """Map u in [0, 1] to a parameter well inside the admissible interval."""
    f, R = CASES[name]
    lo, hi = circle.critical_domain(f, R).clamp(-3.0, 3.0, margin=0.02)
    return f, R, lo + u * (hi - lo)


unit = st.floats(0, 1, allow_nan=False)


@given(point, point)
def test_distance_is_1_lipschitz(p, q):
    for S in sets():
        assert abs(S.distance(p) - S.distance(q)) <= np.linalg.norm(p - q) + 1e-8


@given(st.lists(point, min_size=1, max_size=6), st.lists(point, min_size=1, max_size=6),
       st.lists(point, min_size=1, max_size=6))
def test_hausdorff_metric_axioms(a, b, c):
    assert hausdorff(a, b) == hausdorff(b, a)
    assert hausdorff(a, c) <= hausdorff(a, b) + hausdorff(b, c) + 1e-12
    assert hausdorff(a, a) == 0


@given(st.floats(-3, 3), st.floats(0.05, 4))
def test_epigraph_normal_condition(x, drop):
    f = Poly1D([1.0, 0.0, 1.0])
    p = np.array([x, f.value(x) - drop])
    n = Epigraph(f).nearest(p)
    assert n[1] == pytest.approx(f.value(n[0]), abs=1e-9)
    # p - n is parallel to the outer normal (f'(s), -1)
    v = p - n
    normal = np.array([f.gradient(n[0]), -1.0])
    assert abs(v[0] * normal[1] - v[1] * normal[0]) <= 1e-7 * (1 + np.linalg.norm(v) * np.linalg.norm(normal))


@given(case, st.floats(-3, 3))
def test_sign_property_on_vertical_lines(name, x):
    f, R = CASES[name]
    L = Epigraph(f)
    K = Ball(R)
    fx = float(f.value(x))
    assume(math.isfinite(fx) and fx < 50)
    assert equidistant_residual([x, fx], K, L) > 0
    assert equidistant_residual([x, -R - 100.0], K, L) < 0


@given(case, st.floats(-2.5, 2.5))
def test_unique_root_for_convex_f(name, x):
    f, R = CASES[name]
    s = scan_vertical(x, Ball(R), f)
    assert s.roots.size == 1
    assert abs(equidistant_residual([x, s.g_minus], Ball(R), Epigraph(f))) <= 1e-8


@given(case, unit)
def test_g_identity_and_distance(name, u):
    f, R, t = admissible_t(name, u)
    p = circle.equidistant_point(f, R, t)
    d1 = float(f.gradient(t))
    assert p.g == pytest.approx(d1 / math.hypot(1, d1), abs=1e-12)
    assert p.r - R == pytest.approx(p.s, rel=1e-12, abs=1e-12)
    assert abs(p.g) < 1 and p.y < f.value(t)


@given(case, unit)
def test_reconstruct_round_trip(name, u):
    f, R, t = admissible_t(name, u)
    p = circle.equidistant_point(f, R, t)
    _, fv, fs = circle.reconstruct_f([p], R=R)
    assert fv[0] == pytest.approx(float(f.value(t)), rel=1e-9, abs=1e-9)
    assert fs[0] == pytest.approx(float(f.gradient(t)), rel=1e-7, abs=1e-9)


@given(case, unit)
def test_monotone_and_positive(name, u):
    f, R, t = admissible_t(name, u)
    dx, _ = circle.derivatives(f, R, t)
    p = circle.equidistant_point(f, R, t)
    assert dx > 0
    assert math.sqrt(1 - p.g ** 2) + p.y / p.r > 0


@given(case, unit)
def test_angular_identity(name, u):
    f, R, t = admissible_t(name, u)
    assert abs(circle.angular_residual(f, R, t)) <= 1e-6


@given(st.floats(0.02, 0.98))
def test_h_round_trip_between_knots(u):
    f, R = CASES["sqrt"]
    knots = circle.trace_curve(f, R, np.linspace(-3, 3, 1201))
    G = curve_to_G(knots)
    t = -2.5 + 5 * u
    p = circle.equidistant_point(f, R, t)
    assert h_map(G, R, p.x) == pytest.approx(t, abs=1e-6)


@given(st.lists(st.floats(-2, 2), min_size=1, max_size=3), point)
def test_union_identity(centers, p):
    fam = [ShiftedParabola(c, 1.0) for c in centers]
    joint = Epigraph(PointwiseMin(fam)).distance(p)
    assert joint == pytest.approx(min(Epigraph(g).distance(p) for g in fam), abs=1e-9)


@given(case, unit)
def test_one_dimensional_consistency(name, u):
    f, R, t = admissible_t(name, u)
    a = circle.equidistant_point(f, R, t)
    b = sphere.equidistant_point_nd(f, R, [t])
    assert b.x[0] == pytest.approx(a.x, rel=1e-13, abs=1e-13)
    assert b.y == pytest.approx(a.y, rel=1e-13, abs=1e-13)
    assert float(sphere.alpha_nd(f, [t])) == pytest.approx(a.alpha, abs=1e-14)


@given(st.floats(0, 2 * math.pi), st.floats(0, 0.6))
def test_radial_points_are_equidistant(theta, rad):
    f = ShiftedParabola([0.0, 0.0], 1.0)
    t = rad * np.array([math.cos(theta), math.sin(theta)])
    p = sphere.equidistant_point_nd(f, 0.5, t)
    q = np.append(p.x, p.y)
    assert Ball(0.5, dim=3).distance(q) == pytest.approx(Epigraph(f).distance(q), abs=1e-8)


@given(st.integers(0, 8))
def test_fat_cantor_measure(depth):
    c = fat_cantor(depth)
    removed = sum((b - a for a, b in c.removed), Fraction(0))
    assert c.measure == 1 - removed
    assert c.measure == Fraction(1, 2) + Fraction(1, 2 ** (depth + 1))
    assert len(c.removed) == 2 ** depth - 1
