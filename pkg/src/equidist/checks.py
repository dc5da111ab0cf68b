"""End-to-end checks shared by the acceptance tests and ``equidist verify``.

Each check returns a CheckResult; none of them raises on a failed
comparison. Reference numbers that are not closed forms come from scipy's
brentq applied to the explicit scalar equations, which is independent of the
bisection code under test.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from . import circle, sphere
from .characterize import curve_to_G, h_map, is_equidistant_function, radial_G
from .functions import (Exp, Poly1D, ShiftedParabola, Sqrt1p, infimum, example_quadform)
from .geometry import Ball, Epigraph, PointCloud, equidistant_residual, hausdorff
from .minop import min_commute_check, sandwich_check
from .pathology import build_scene, measure_estimate, measure_limit, segment_membership_test
from .vertical import profile


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    metrics: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail} ({self.elapsed:.2f} s)"

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "metrics": self.metrics, "elapsed": self.elapsed}


def _timed(fn):
    def run(**kw):
        start = time.perf_counter()
        res = fn(**kw)
        res.elapsed = time.perf_counter() - start
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# planar catalog: (label, f, R, t-range for traced grids)
def planar_catalog():
    return [
        ("sqrt(t^2+1), R=0.9", Sqrt1p(), 0.9, (-3.0, 3.0)),
        ("exp(t), R=0.5", Exp(), 0.5, (-3.0, 1.3)),
        ("t^2+1, R=0.5", Poly1D([1.0, 0.0, 1.0]), 0.5, (-1.5, 1.5)),
        ("(t-0.5)^2+1, R=0.5", ShiftedParabola(0.5, 1.0), 0.5, (-1.0, 1.5)),
    ]


def exp_reference():
    return brentq(lambda t: math.exp(t) * (t - 1) - 0.5 * math.sqrt(1 + math.exp(2 * t)),
                  0.5, 3.0, xtol=1e-15)


def parabola_reference():
    return brentq(lambda t: t * t - 1 - 0.5 * math.sqrt(1 + 4 * t * t), 1.0, 3.0, xtol=1e-15)


@_timed
def check_domain(**_):
    """Critical-parameter trichotomy for the three planar examples."""
    out, ok, slow = {}, True, []
    for label, f, R in (("sqrt1p", Sqrt1p(), 0.9), ("exp", Exp(), 0.5),
                        ("t^2+1", Poly1D([1.0, 0.0, 1.0]), 0.5)):
        start = time.perf_counter()
        dom = circle.critical_domain(f, R, search_radius=1e3)
        took = time.perf_counter() - start
        out[label] = (dom.t_minus, dom.t_plus, took)
        if took >= 1.0:
            slow.append(label)
    tm, tp, _ = out["sqrt1p"]
    ok &= tm == -math.inf and tp == math.inf
    tm, tp, _ = out["exp"]
    ok &= tm == -math.inf and abs(tp - exp_reference()) <= 1e-6
    tm, tp, _ = out["t^2+1"]
    ref = parabola_reference()
    ok &= abs(tp - ref) <= 1e-6 and abs(tm + ref) <= 1e-6 and abs(tp + tm) <= 1e-12
    ok &= not slow
    detail = (f"exp t+={out['exp'][1]:.12g} (ref {exp_reference():.12g}); "
              f"t^2+1 t-={out['t^2+1'][0]:.12g} t+={out['t^2+1'][1]:.12g}")
    return CheckResult("domain", bool(ok), detail, {k: list(v) for k, v in out.items()})


@_timed
def check_counterexample(**_):
    """Minimum of the two-variable quadratic and the disconnected ray domain."""
    q = example_quadform()
    arg, low = infimum(q, [(-3.0, 3.0), (-3.0, 3.0)])
    err_arg = float(np.max(np.abs(arg - np.array([-1 / 6, 1 / 60]))))
    err_min = abs(low - 0.75)
    rays = sphere.ray_admissible_segments(q, 0.3, [1.0, 0.0], 6.0)
    edges = [rays.segments[0][1], rays.segments[1][0], rays.segments[1][1]] if len(rays.segments) == 2 else []
    ok = (err_arg <= 1e-12 and err_min <= 1e-12 and abs(rays.t_u_plus - 1.37) <= 0.01
          and len(rays.segments) == 2
          and all(abs(a - b) <= 0.05 for a, b in zip(edges, (1.425, 1.865, 4.08))))
    detail = f"argmin err {err_arg:.1e}, t_u+={rays.t_u_plus:.6f}, segments={[(round(a, 4), round(b, 4)) for a, b in rays.segments]}"
    return CheckResult("counterexample", bool(ok), detail,
                       {"argmin_error": err_arg, "min_error": err_min, "t_u_plus": rays.t_u_plus,
                        "segments": rays.segments})


def _nd_oracle_points(n_side=11):
    q, R = example_quadform(), 0.3
    a = np.linspace(-0.3, 0.3, n_side) - 1 / 6
    b = np.linspace(-0.01, 0.01, n_side) + 1 / 60
    t = np.stack(np.meshgrid(a, b, indexing="ij"), axis=-1).reshape(-1, 2)
    t = t[sphere.alpha_nd(q, t) < R]
    return q, R, t


@_timed
def check_oracle(perturb=False, **_):
    """Closed-form points against brute-force distances and vertical scans."""
    worst_d, worst_y, counts = 0.0, 0.0, {}
    shift = 1e-3 if perturb else 0.0
    for label, f, R, (lo, hi) in planar_catalog():
        t = circle.critical_domain(f, R).grid(lo, hi, 100, margin=1e-4)
        c = circle.trace_curve(f, R, t)
        y = c.y + shift
        pts = np.column_stack([c.x, y])
        worst_d = max(worst_d, float(np.max(np.abs(equidistant_residual(pts, Ball(R), Epigraph(f))))))
        scans = profile(c.x, Ball(R), Epigraph(f))
        worst_y = max(worst_y, max(abs(s.g_minus - yy) for s, yy in zip(scans, y)))
        counts[label] = len(t)
    q, R, t = _nd_oracle_points()
    _, x, y, *_ = sphere._columns_nd(q, R, t)
    y = y + shift
    pts = np.column_stack([x, y])
    K = Ball(R, dim=3)
    worst_d = max(worst_d, float(np.max(np.abs(equidistant_residual(pts, K, Epigraph(q))))))
    scans = profile(x, K, Epigraph(q))
    worst_y = max(worst_y, max(abs(s.g_minus - yy) for s, yy in zip(scans, y)))
    counts["quadform, R=0.3"] = len(t)
    ok = worst_d <= 1e-7 and worst_y <= 1e-7 and min(counts.values()) >= 100
    return CheckResult("oracle", bool(ok), f"max |dK-dL|={worst_d:.1e}, max |y-root|={worst_y:.1e}",
                       {"distance": worst_d, "root": worst_y, "samples": counts})


def _compat_cases():
    """(label, residual-of-y, y, stencil order). Second order unless the patch is stiff."""
    h = 1e-3
    for label, f, R, (lo, hi) in planar_catalog():
        lo, hi = circle.critical_domain(f, R).clamp(lo, hi, 1e-3)
        t = np.arange(lo, hi, h)
        c = circle.trace_curve(f, R, t)
        yield label, (lambda y, c=c, R=R: circle.compatibility_residual(c.t, c.x, y, R, 2)), c.y, 2
    a = np.arange(-0.1, 0.1 + h / 2, h)
    patch = sphere.trace_patch(ShiftedParabola([0.0, 0.0], 1.0), 0.5, (a + 0.3, a))
    yield "|t|^2+1 patch, R=0.5", (lambda y, p=patch: sphere.compatibility_residual_nd(
        _with_y(p, y), order=2)), patch.y, 2
    # t2 is stiff here (Hessian entry 2000): x varies on a 5e-4 scale, so
    # second-order differences at h = 1e-3 are too coarse; use sixth order
    a = np.arange(-0.005, 0.005 + h / 2, h)
    patch = sphere.trace_patch(example_quadform(), 0.3, (a, a))
    yield "quadform patch at origin, R=0.3", (lambda y, p=patch: sphere.compatibility_residual_nd(
        _with_y(p, y), order=6)), patch.y, 6


def _with_y(patch, y):
    return sphere.Patch(patch.R, patch.axes, patch.t, patch.x, y, patch.s, patch.alpha, patch.g, patch.r)


@_timed
def check_compatibility(perturb=False, **_):
    """Compatibility residual at grid step 1e-3 and its 1% negative control."""
    worst, control, per = 0.0, math.inf, {}
    for label, residual, y, order in _compat_cases():
        base = float(np.max(np.abs(residual(y * (1.01 if perturb else 1.0)))))
        neg = float(np.max(np.abs(residual(y * 1.01))))
        per[label] = {"residual": base, "perturbed": neg, "order": order}
        worst, control = max(worst, base), min(control, neg)
    ok = worst <= 1e-5 and control > 1e-3
    return CheckResult("compatibility", bool(ok),
                       f"max residual {worst:.1e}; smallest perturbed residual {control:.1e}", {"cases": per})


@_timed
def check_characterization(**_):
    """h round trip on traced samples; verdicts on traced and concave G."""
    worst_h, verdicts = 0.0, {}
    for label, f, R, (lo, hi) in planar_catalog()[:3]:
        c = circle.trace_curve(f, R, circle.critical_domain(f, R).grid(lo, hi, 1201, margin=1e-4))
        G = curve_to_G(c)
        worst_h = max(worst_h, float(np.max(np.abs(h_map(G, R, c.x) - c.t))))
        rep = is_equidistant_function(G, R, np.linspace(0.9 * lo, 0.9 * hi, 201))
        verdicts[label] = rep.ok
    prof = Poly1D([1.0, 0.0, 1.0])
    c = circle.trace_curve(prof, 0.5, circle.critical_domain(prof, 0.5).grid(-1.6, 1.6, 1601))
    G2 = radial_G(c, 2)
    p = sphere.equidistant_point_nd(ShiftedParabola([0.0, 0.0], 1.0), 0.5, [0.3, 0.4])
    nd_err = float(np.max(np.abs(h_map(G2, 0.5, p.x) - p.t)))
    concave = is_equidistant_function(Poly1D([-0.1, 0.0, 0.75]), 0.5, np.linspace(-2, 2, 201))
    ok = worst_h <= 1e-8 and nd_err <= 1e-7 and all(verdicts.values()) and not concave.ok
    return CheckResult("characterization", bool(ok),
                       f"max |h(x(t))-t|={worst_h:.1e}, radial {nd_err:.1e}; concave G rejected: {not concave.ok} "
                       f"({'; '.join(concave.failures)})",
                       {"h_error": worst_h, "nd_error": nd_err, "verdicts": verdicts,
                        "concave_failures": concave.failures})


@_timed
def check_angular(**_):
    """Angular identity across traced grids."""
    worst = 0.0
    for label, f, R, (lo, hi) in planar_catalog():
        t = circle.critical_domain(f, R).grid(lo, hi, 201, margin=1e-4)
        worst = max(worst, float(np.max(np.abs(circle.angular_residual(f, R, t)))))
    return CheckResult("angular", worst <= 1e-6, f"max residual {worst:.1e}", {"max": worst})


@_timed
def check_minop(**_):
    """Sandwich and min-commuting for two shifted parabolas and Ball{0.5}."""
    fam = [ShiftedParabola(1.0, 1.0), ShiftedParabola(-1.0, 1.0)]
    xs = np.linspace(-2, 2, 41)
    sw = sandwich_check(Ball(0.5), fam, xs)
    mc = min_commute_check(Ball(0.5), fam, xs)
    ok = sw.ok and mc.ok
    return CheckResult("minop", bool(ok),
                       f"sandwich violations {len(sw.violations)}, max |G_min - min G_i|={mc.max_gap:.1e}",
                       {"sandwich": sw.violations, "commute_gap": mc.max_gap})


@_timed
def check_svc(**_):
    """Vertical segment of the convex scene; fat Cantor slice of the trimmed one."""
    scene = build_scene(3)
    seg = segment_membership_test(scene, np.linspace(-0.5, 0.5, 101), use_trimmed=False)
    trim = segment_membership_test(scene, np.linspace(-0.5, 0.5, 257), use_trimmed=True)
    meas = measure_estimate(scene)
    ok = (bool(seg.is_equidistant.all()) and float(np.max(np.abs(seg.residual))) <= 1e-9
          and int((~trim.agrees).sum()) == 0 and meas == 0.5625 and measure_limit() == 0.5)
    return CheckResult("svc", bool(ok),
                       f"segment residual {float(np.max(np.abs(seg.residual))):.1e}, "
                       f"disagreements {int((~trim.agrees).sum())}, kept measure {meas}",
                       {"kept_measure": meas, "limit": float(measure_limit())})


@_timed
def check_sweeps(**_):
    """x'(t) > 0, sqrt(1-g^2) + y/r > 0 and |g| < 1 at every traced node."""
    worst = {"dx": math.inf, "coef": math.inf, "g": 0.0}
    for label, f, R, (lo, hi) in planar_catalog():
        t = circle.critical_domain(f, R).grid(lo, hi, 2001, margin=1e-4)
        c = circle.trace_curve(f, R, t)
        dx, _ = circle.derivatives(f, R, t)
        worst["dx"] = min(worst["dx"], float(dx.min()))
        worst["coef"] = min(worst["coef"], float(circle.positivity_coefficient(c).min()))
        worst["g"] = max(worst["g"], float(np.abs(c.g).max()))
    ok = worst["dx"] > 0 and worst["coef"] > 0 and worst["g"] < 1
    return CheckResult("sweeps", bool(ok),
                       f"min x'={worst['dx']:.3g}, min coefficient={worst['coef']:.3g}, max |g|={worst['g']:.6f}", worst)


def circle_cloud(R, n):
    ang = -0.5 * math.pi + 2 * math.pi * np.arange(n) / n
    return PointCloud(np.column_stack([R * np.cos(ang), R * np.sin(ang)]))


@_timed
def check_convergence(**_):
    """Point clouds on the circle approach the ball; so do the scanned profiles."""
    f, R = Poly1D([1.0, 0.0, 1.0]), 0.5
    c = circle.trace_curve(f, R, np.linspace(-1.0, 1.0, 41))
    exact = c.points()
    dists = {}
    for n in (10, 100, 1000):
        scans = profile(c.x, circle_cloud(R, n), Epigraph(f))
        pts = np.array([(float(s.x[0]), y) for s in scans for y in s.roots])
        dists[n] = hausdorff(pts, exact)
    seq = [dists[n] for n in (10, 100, 1000)]
    ok = seq[0] > seq[1] > seq[2]
    return CheckResult("convergence", bool(ok),
                       ", ".join(f"N={n}: {d:.2e}" for n, d in dists.items()), {"hausdorff": dists})


CHECKS = {
    "domain": check_domain,
    "counterexample": check_counterexample,
    "oracle": check_oracle,
    "compatibility": check_compatibility,
    "characterization": check_characterization,
    "angular": check_angular,
    "minop": check_minop,
    "svc": check_svc,
    "sweeps": check_sweeps,
    "convergence": check_convergence,
}


def run_checks(only=None, perturb=False):
    names = list(CHECKS) if not only else list(only)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    return [CHECKS[n](perturb=perturb) for n in names]
