"""Closed-form equidistant curve for a circle about the origin and an epigraph.

For a foot parameter t on the graph of f, the equidistant point is found
along the inward normal of the graph at (t, f(t)); its distance s to both
focal sets is explicit as long as alpha(t) < R, where alpha(t) is the signed
distance of the tangent line at t from the origin.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._numerics import bisect_predicate, central_difference
from .errors import (CriticalParameterError, DisjointnessError, MonotonicityError,
                     NotParameterizationError, SpecError)
from .functions import FunctionSpec


@dataclass(frozen=True)
class ParamSample:
    t: float
    x: float
    y: float
    s: float
    alpha: float
    g: float
    r: float


@dataclass(frozen=True)
class CriticalDomain:
    """Open interval ]t_minus, t_plus[ of admissible parameters."""

    t_minus: float
    t_plus: float

    def __contains__(self, t):
        return self.t_minus < t < self.t_plus

    def clamp(self, lo, hi, margin=1e-6):
        """Pull [lo, hi] inside the domain, backing off finite ends by margin * width."""
        width = self.t_plus - self.t_minus
        if not math.isfinite(width):
            finite = [abs(v) for v in (self.t_minus, self.t_plus) if math.isfinite(v)]
            width = max([1.0] + finite)
        if math.isfinite(self.t_plus):
            hi = min(hi, self.t_plus - margin * width)
        if math.isfinite(self.t_minus):
            lo = max(lo, self.t_minus + margin * width)
        return lo, hi

    def grid(self, lo, hi, n, margin=1e-6):
        lo, hi = self.clamp(lo, hi, margin)
        return np.linspace(lo, hi, n)


@dataclass
class Curve:
    """Traced samples as parallel arrays; iterating yields ParamSample rows."""

    R: float
    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    s: np.ndarray
    alpha: np.ndarray
    g: np.ndarray
    r: np.ndarray

    def __len__(self):
        return self.t.size

    def __getitem__(self, i):
        return ParamSample(*(float(getattr(self, k)[i]) for k in ("t", "x", "y", "s", "alpha", "g", "r")))

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    def points(self):
        return np.column_stack([self.x, self.y])


def alpha(f: FunctionSpec, t):
    """Signed distance from the origin to the tangent line of f at t."""
    t = np.asarray(t, dtype=float)
    d1 = f.gradient(t)
    return (t * d1 - f.value(t)) / np.hypot(1.0, d1)


def _first_critical(indicator, search_radius, tol):
    """Smallest t in (0, search_radius] with indicator(t), assuming upward closure."""
    lo, probe = 0.0, 1.0
    while True:
        probe = min(probe, search_radius)
        if indicator(probe):
            break
        if probe >= search_radius:
            return math.inf
        lo, probe = probe, 2.0 * probe
    return float(bisect_predicate(lambda t: indicator(t), np.array(lo), np.array(probe), tol=tol))


def critical_domain(f: FunctionSpec, R: float, search_radius: float = 1e3,
                    tol: float = 1e-10) -> CriticalDomain:
    """Admissible interval around 0, by bisection of the indicator alpha >= R.

    The critical set on each half-axis is closed upward (away from 0), so the
    indicator is monotone there even where alpha itself is not. NaN values of
    alpha (overflow far out) count as critical.
    """
    if not R > 0:
        raise SpecError("R must be positive", "R")
    if not float(alpha(f, 0.0)) < R:
        raise CriticalParameterError(f"alpha(0) >= R = {R}; the focal sets cannot be disjoint")

    def crit(sign):
        return lambda t: ~(alpha(f, sign * np.asarray(t)) < R)

    with np.errstate(over="ignore", invalid="ignore"):
        t_plus = _first_critical(crit(1.0), search_radius, tol)
        t_minus = -_first_critical(crit(-1.0), search_radius, tol)
    return CriticalDomain(t_minus, t_plus)


def _columns(f, R, t, check=True):
    t = np.asarray(t, dtype=float)
    fv = f.value(t)
    d1 = f.gradient(t)
    w = np.hypot(1.0, d1)
    a = (t * d1 - fv) / w
    if check:
        bad = ~(a < R)
        if np.any(bad):
            raise CriticalParameterError(
                f"critical parameter t={float(np.atleast_1d(t)[np.argmax(np.atleast_1d(bad))])!r}: alpha >= R")
        near = t * t + fv * fv <= R * R
        if np.any(near):
            raise DisjointnessError(
                f"graph point at t={float(np.atleast_1d(t)[np.argmax(np.atleast_1d(near))])!r} lies in the disk")
    s = 0.5 * (t * t + fv * fv - R * R) / (R - a)
    x = t + s * d1 / w
    y = fv - s / w
    r = np.hypot(x, y)
    g = (x - t) / (r - R)
    if check and np.any(np.abs(r - R - s) > 1e-9 * np.maximum(1.0, s)):
        raise AssertionError("common distance mismatch: r - R differs from s")
    return t, x, y, s, a, g, r


def equidistant_point(f: FunctionSpec, R: float, t: float) -> ParamSample:
    return ParamSample(*(float(v) for v in _columns(f, R, float(t))))


def trace_curve(f: FunctionSpec, R: float, t_grid) -> Curve:
    t_grid = np.sort(np.atleast_1d(np.asarray(t_grid, dtype=float)))
    curve = Curve(R, *_columns(f, R, t_grid))
    if np.any(np.diff(curve.x) <= 0):
        k = int(np.argmax(np.diff(curve.x) <= 0))
        raise MonotonicityError(f"x(t) not increasing between t={t_grid[k]!r} and t={t_grid[k + 1]!r}")
    return curve


def derivatives(f: FunctionSpec, R: float, t):
    """Exact (x'(t), y'(t)) by the chain rule; needs f''."""
    t = np.asarray(t, dtype=float)
    fv, d1, d2 = f.value(t), f.gradient(t), f.hessian(t)
    w2 = 1.0 + d1 * d1
    w = np.sqrt(w2)
    a = (t * d1 - fv) / w
    da = d2 * (t + fv * d1) / (w2 * w)
    num = 0.5 * (t * t + fv * fv - R * R)
    s = num / (R - a)
    ds = ((t + fv * d1) * (R - a) + num * da) / (R - a) ** 2
    g = d1 / w
    dg = d2 / (w2 * w)
    dx = 1.0 + ds * g + s * dg
    dy = d1 - ds / w + s * d1 * d2 / (w2 * w)
    return dx, dy


def positivity_coefficient(curve):
    """sqrt(1 - g^2) + y / r along a curve."""
    return np.sqrt(1.0 - curve.g ** 2) + curve.y / curve.r


def _fields(samples, R=None):
    if isinstance(samples, (Curve,)) or hasattr(samples, "x") and hasattr(samples, "t"):
        t, x, y = (np.atleast_1d(np.asarray(getattr(samples, k), dtype=float)) for k in "txy")
        gap = None if R is not None else np.atleast_1d(np.asarray(samples.s, dtype=float))
    else:
        rows = list(samples)
        t, x, y = (np.array([getattr(p, k) for p in rows], dtype=float) for k in "txy")
        gap = None if R is not None else np.array([p.s for p in rows], dtype=float)
    if gap is None:
        gap = np.hypot(x, y) - R
    return t, x, y, gap


def reconstruct_f(samples, R=None):
    """Recover (t, f(t), f'(t)) from equidistant samples.

    The gap r - R is taken from each sample's ``s`` unless ``R`` is given, in
    which case it is recomputed from (x, y).
    """
    t, x, y, gap = _fields(samples, R)
    rad = gap * gap - (x - t) ** 2
    if np.any(gap <= 0) or np.any(rad <= 0):
        raise NotParameterizationError(
            "samples cannot come from an equidistant parameterization (r <= R or |x - t| >= r - R)")
    root = np.sqrt(rad)
    return t, y + root, (x - t) / root


def compatibility_residual(t, x, y, R, order=2):
    """(g - x/r) x' - (sqrt(1 - g^2) + y/r) y' at the interior nodes of a uniform grid.

    g and r are recomputed from the samples so that any perturbation of
    (x, y) shows up in the coefficients as well as in the differences.
    ``order`` selects the central-difference stencil (2, 4 or 6).
    """
    t, x, y = (np.asarray(v, dtype=float) for v in (t, x, y))
    k = order // 2
    if t.size < 2 * k + 1:
        raise SpecError(f"need at least {2 * k + 1} samples", "samples")
    h = t[1] - t[0]
    if not np.allclose(np.diff(t), h, rtol=1e-6, atol=1e-12):
        raise SpecError("compatibility residual needs a uniform grid", "t")
    r = np.hypot(x, y)
    g = (x - t) / (r - R)
    dx = central_difference(x, h, order=order)
    dy = central_difference(y, h, order=order)
    i = slice(k, t.size - k)
    root = np.sqrt(np.clip(1.0 - g[i] ** 2, 0.0, None))
    return (g[i] - x[i] / r[i]) * dx - (root + y[i] / r[i]) * dy


def _wrap_pi(a):
    return (a + 0.5 * np.pi) % np.pi - 0.5 * np.pi


def _fd_tangent(f, R, t, h):
    t = np.asarray(t, dtype=float)
    h = h if h is not None else 1e-5 * np.maximum(1.0, np.abs(t))
    _, xp, yp, *_ = _columns(f, R, t + h)
    _, xm, ym, *_ = _columns(f, R, t - h)
    return (xp - xm) / (2 * h), (yp - ym) / (2 * h)


def angular_residual(f: FunctionSpec, R: float, t, h=None):
    """Defect of theta_e = (theta_f + rho_e)/2 - pi/4 (mod pi).

    theta_f is the inclination of the graph tangent at t, rho_e the polar
    angle of the equidistant point and theta_e the inclination of the curve
    tangent, taken from central differences with fresh evaluations.
    """
    _, x, y, *_ = _columns(f, R, t)
    dx, dy = _fd_tangent(f, R, t, h)
    theta_e = np.arctan2(dy, dx)
    theta_f = np.arctan(f.gradient(np.asarray(t, dtype=float)))
    rho_e = np.arctan2(y, x)
    return _wrap_pi(theta_e - (0.5 * (theta_f + rho_e) - 0.25 * np.pi))


def hyperbola_tangency_residual(sample: ParamSample, f: FunctionSpec, R: float, h=None):
    """(membership, orthogonality) for the branch with foci (0, 0) and (t, f(t)).

    Membership is | |p - (t, f(t))| - |p| + R | at the sample point p; the
    orthogonality defect is the cosine between the branch gradient at p and
    the curve tangent at t.
    """
    t, x, y = sample.t, sample.x, sample.y
    ft = float(f.value(t))
    d = math.hypot(x - t, y - ft)
    r = math.hypot(x, y)
    membership = abs(d - r + R)
    grad = np.array([(x - t) / d - x / r, (y - ft) / d - y / r])
    dx, dy = _fd_tangent(f, R, t, h)
    tangent = np.array([float(dx), float(dy)])
    ortho = abs(grad @ tangent) / (np.linalg.norm(grad) * np.linalg.norm(tangent))
    return membership, float(ortho)
