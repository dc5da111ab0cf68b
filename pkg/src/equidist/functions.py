"""Catalog of (mostly convex) functions with exact derivatives.

Array conventions
-----------------
One-dimensional specs (``dim == 1``) act elementwise on arrays of any shape;
``gradient`` returns f' and ``hessian`` returns f'' with the input's shape.
Specs with ``dim == n >= 2`` take points with a trailing axis of length n and
return values of shape ``t.shape[:-1]``, gradients of shape ``(..., n)`` and
Hessians of shape ``(..., n, n)``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.interpolate import CubicHermiteSpline, CubicSpline

from ._numerics import bisect_monotone_root, golden_section
from .errors import BreakpointError, ConvergenceError, SpecError


@dataclass(frozen=True)
class Jet:
    value: float
    gradient: np.ndarray
    hessian: Optional[np.ndarray] = None


class FunctionSpec:
    kind = "abstract"
    dim = 1
    smooth = True   # gradient defined everywhere
    convex = True   # known to be convex (False means "not certified")

    def value(self, t):
        raise NotImplementedError

    def gradient(self, t):
        raise NotImplementedError(f"{self.kind} has no gradient")

    def hessian(self, t):
        raise NotImplementedError(f"{self.kind} has no Hessian")

    def to_json(self) -> dict:
        raise NotImplementedError

    def __call__(self, t):
        return self.value(t)

    def __repr__(self):
        return f"{type(self).__name__}({json.dumps(self.to_json())})"


class Sqrt1p(FunctionSpec):
    """f(t) = sqrt(t**2 + 1)."""

    kind = "sqrt1p"

    def value(self, t):
        return np.hypot(t, 1.0)

    def gradient(self, t):
        t = np.asarray(t, dtype=float)
        return t / np.hypot(t, 1.0)

    def hessian(self, t):
        return np.hypot(t, 1.0) ** -3

    def to_json(self):
        return {"kind": self.kind}


class Exp(FunctionSpec):
    kind = "exp"

    def value(self, t):
        return np.exp(t)

    gradient = value
    hessian = value

    def to_json(self):
        return {"kind": self.kind}


class Poly1D(FunctionSpec):
    """Polynomial with coefficients ordered from the highest degree down."""

    kind = "poly1d"

    def __init__(self, coeffs: Sequence[float]):
        c = np.trim_zeros(np.asarray(coeffs, dtype=float), "f")
        if c.size == 0:
            c = np.zeros(1)
        self.coeffs = c
        self._d1 = np.polyder(c) if c.size > 1 else np.zeros(1)
        self._d2 = np.polyder(c, 2) if c.size > 2 else np.zeros(1)
        degree = c.size - 1
        self.convex = degree <= 1 or (degree == 2 and c[0] > 0)

    def value(self, t):
        return np.polyval(self.coeffs, t)

    def gradient(self, t):
        return np.polyval(self._d1, t)

    def hessian(self, t):
        return np.polyval(self._d2, t)

    def to_json(self):
        return {"kind": self.kind, "coeffs": self.coeffs.tolist()}


class QuadFormND(FunctionSpec):
    """f(t) = t.Q.t + b.t + c on R^n."""

    kind = "quadform"

    def __init__(self, Q, b, c):
        Q = np.atleast_2d(np.asarray(Q, dtype=float))
        b = np.asarray(b, dtype=float).ravel()
        if Q.shape[0] != Q.shape[1] or Q.shape[0] != b.size:
            raise SpecError("Q must be square and match b", "Q")
        if not np.allclose(Q, Q.T):
            raise SpecError("Q must be symmetric", "Q")
        if np.linalg.eigvalsh(Q).min() < -1e-12 * max(1.0, np.abs(Q).max()):
            raise SpecError("Q must be positive semidefinite", "Q")
        self.Q, self.b, self.c = Q, b, float(c)
        self.dim = b.size

    def value(self, t):
        t = np.asarray(t, dtype=float)
        return np.einsum("...i,ij,...j->...", t, self.Q, t) + t @ self.b + self.c

    def gradient(self, t):
        t = np.asarray(t, dtype=float)
        return 2.0 * t @ self.Q + self.b

    def hessian(self, t):
        t = np.asarray(t, dtype=float)
        return np.broadcast_to(2.0 * self.Q, t.shape[:-1] + self.Q.shape)

    def leading_minors(self):
        return [float(np.linalg.det(self.Q[:k, :k])) for k in range(1, self.dim + 1)]

    def stationary_point(self):
        return np.linalg.solve(2.0 * self.Q, -self.b)

    def to_json(self):
        return {"kind": self.kind, "Q": self.Q.tolist(), "b": self.b.tolist(), "c": self.c}


class ShiftedParabola(FunctionSpec):
    """f(t) = |t - center|**2 + offset; scalar center gives a 1D spec."""

    kind = "shifted_parabola"

    def __init__(self, center, offset):
        center = np.asarray(center, dtype=float)
        self.center = center
        self.offset = float(offset)
        self.dim = 1 if center.ndim == 0 else center.size

    def value(self, t):
        d = np.asarray(t, dtype=float) - self.center
        if self.dim == 1:
            return d * d + self.offset
        return np.sum(d * d, axis=-1) + self.offset

    def gradient(self, t):
        return 2.0 * (np.asarray(t, dtype=float) - self.center)

    def hessian(self, t):
        t = np.asarray(t, dtype=float)
        if self.dim == 1:
            return np.full(t.shape, 2.0)
        return np.broadcast_to(2.0 * np.eye(self.dim), t.shape[:-1] + (self.dim, self.dim))

    def to_json(self):
        return {"kind": self.kind, "center": self.center.tolist(), "offset": self.offset}


class PiecewiseSVC(FunctionSpec):
    """Convex scene function: a line ray, a lower circular arc, a flat ray.

    The arc is the lower part of the circle of radius ``R`` around
    ``(2*x0, y0)``. The left breakpoint ``2*x0 - sqrt(3)`` equals 3 exactly in
    real arithmetic; the slope is continuous there (-sqrt(3) from both sides)
    but jumps from -1 to 0 at the right breakpoint ``2*x0 - sqrt(2)``.
    """

    kind = "svc"
    smooth = False

    def __init__(self):
        s3 = math.sqrt(3.0)
        self.x0 = s3 / (s3 - 1.0)
        self.y0 = 0.5 * (s3 + 1.0) / (s3 - 1.0)
        self.R = 2.0
        self.center = np.array([2.0 * self.x0, self.y0])
        self.left_break = 2.0 * self.x0 - s3
        self.right_break = 2.0 * self.x0 - math.sqrt(2.0)
        self.flat_height = self.y0 - math.sqrt(2.0)

    def line_value(self, x):
        s3 = math.sqrt(3.0)
        return -s3 * x + 2.0 * s3 * self.x0 + self.y0 - 4.0

    def value(self, t):
        t = np.asarray(t, dtype=float)
        u = t - self.center[0]
        arc = self.y0 - np.sqrt(np.clip(self.R**2 - u * u, 0.0, None))
        out = np.where(t <= self.left_break, self.line_value(t), arc)
        return np.where(t >= self.right_break, self.flat_height, out)

    def _check(self, t):
        for b in (self.left_break, self.right_break):
            if np.any(np.abs(t - b) < 1e-12):
                raise BreakpointError(b)

    def gradient(self, t):
        t = np.asarray(t, dtype=float)
        self._check(t)
        u = t - self.center[0]
        root = np.sqrt(np.clip(self.R**2 - u * u, 1e-300, None))
        out = np.where(t < self.left_break, -math.sqrt(3.0), u / root)
        return np.where(t > self.right_break, 0.0, out)

    def hessian(self, t):
        t = np.asarray(t, dtype=float)
        self._check(t)
        u = t - self.center[0]
        root = np.sqrt(np.clip(self.R**2 - u * u, 1e-300, None))
        inside = (t > self.left_break) & (t < self.right_break)
        return np.where(inside, self.R**2 / root**3, 0.0)

    def to_json(self):
        return {"kind": self.kind}


class Tabulated(FunctionSpec):
    """Piecewise-linear interpolant through knots, linear beyond the ends.

    Used for negative tests; it is convex exactly when its slopes increase.
    """

    kind = "tabulated"
    smooth = False

    def __init__(self, knots):
        k = np.asarray(knots, dtype=float)
        if k.ndim != 2 or k.shape[1] != 2 or k.shape[0] < 2:
            raise SpecError("knots must be a list of at least two (t, value) pairs", "knots")
        k = k[np.argsort(k[:, 0])]
        self.xs, self.ys = k[:, 0], k[:, 1]
        self.slopes = np.diff(self.ys) / np.diff(self.xs)
        self.convex = bool(np.all(np.diff(self.slopes) >= 0))

    def value(self, t):
        t = np.asarray(t, dtype=float)
        i = np.clip(np.searchsorted(self.xs, t) - 1, 0, self.slopes.size - 1)
        return self.ys[i] + self.slopes[i] * (t - self.xs[i])

    def gradient(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(np.isin(t, self.xs[1:-1])):
            raise BreakpointError(float(t[np.isin(t, self.xs[1:-1])].flat[0]))
        i = np.clip(np.searchsorted(self.xs, t) - 1, 0, self.slopes.size - 1)
        return self.slopes[i]

    def to_json(self):
        return {"kind": self.kind, "knots": np.column_stack([self.xs, self.ys]).tolist()}


class Spline1D(FunctionSpec):
    """C^1 cubic interpolant with linear extension outside the knot range.

    With ``slopes`` the interpolant is Hermite (slopes honoured exactly at
    the knots), otherwise a not-a-knot cubic spline.
    """

    kind = "spline"
    convex = False

    def __init__(self, xs, ys, slopes=None):
        xs = np.asarray(xs, dtype=float)
        order = np.argsort(xs)
        xs, ys = xs[order], np.asarray(ys, dtype=float)[order]
        if np.any(np.diff(xs) <= 0):
            raise SpecError("spline knots must be distinct", "xs")
        if slopes is None:
            self._spl = CubicSpline(xs, ys)
            self.slopes = None
        else:
            slopes = np.asarray(slopes, dtype=float)[order]
            self._spl = CubicHermiteSpline(xs, ys, slopes)
            self.slopes = slopes
        self.xs, self.ys = xs, ys
        self.lo, self.hi = xs[0], xs[-1]
        self._d1 = self._spl.derivative()
        self._d2 = self._spl.derivative(2)
        self._slope_lo = float(self._d1(self.lo))
        self._slope_hi = float(self._d1(self.hi))

    def value(self, t):
        t = np.asarray(t, dtype=float)
        inner = self._spl(np.clip(t, self.lo, self.hi))
        left = self.ys[0] + self._slope_lo * (t - self.lo)
        right = self.ys[-1] + self._slope_hi * (t - self.hi)
        return np.where(t < self.lo, left, np.where(t > self.hi, right, inner))

    def gradient(self, t):
        t = np.asarray(t, dtype=float)
        inner = self._d1(np.clip(t, self.lo, self.hi))
        return np.where(t < self.lo, self._slope_lo, np.where(t > self.hi, self._slope_hi, inner))

    def hessian(self, t):
        t = np.asarray(t, dtype=float)
        inner = self._d2(np.clip(t, self.lo, self.hi))
        return np.where((t < self.lo) | (t > self.hi), 0.0, inner)

    def to_json(self):
        out = {"kind": self.kind, "xs": self.xs.tolist(), "ys": self.ys.tolist()}
        if self.slopes is not None:
            out["slopes"] = self.slopes.tolist()
        return out


class Radial(FunctionSpec):
    """f(t) = profile(|t|) on R^dim for an even 1D profile."""

    kind = "radial"

    def __init__(self, profile: FunctionSpec, dim: int = 2):
        if profile.dim != 1:
            raise SpecError("radial profile must be one-dimensional", "profile")
        self.profile = profile
        self.dim = int(dim)
        self.convex = profile.convex
        self.smooth = profile.smooth

    def value(self, t):
        return self.profile.value(np.linalg.norm(np.asarray(t, dtype=float), axis=-1))

    def gradient(self, t):
        t = np.asarray(t, dtype=float)
        rho = np.linalg.norm(t, axis=-1)
        d1 = self.profile.gradient(rho)
        safe = np.where(rho > 0, rho, 1.0)
        return np.where((rho > 0)[..., None], (d1 / safe)[..., None] * t, 0.0)

    def hessian(self, t):
        t = np.asarray(t, dtype=float)
        rho = np.linalg.norm(t, axis=-1)
        d1 = self.profile.gradient(rho)
        d2 = self.profile.hessian(rho)
        safe = np.where(rho > 0, rho, 1.0)
        u = t / safe[..., None]
        uu = u[..., :, None] * u[..., None, :]
        eye = np.eye(self.dim)
        h = d2[..., None, None] * uu + (d1 / safe)[..., None, None] * (eye - uu)
        return np.where((rho > 0)[..., None, None], h, d2[..., None, None] * eye)

    def to_json(self):
        return {"kind": self.kind, "profile": self.profile.to_json(), "dim": self.dim}


class PointwiseMin(FunctionSpec):
    """Pointwise minimum of a finite family; derivatives only off crossings."""

    kind = "min"
    smooth = False
    crossing_tol = 1e-12

    def __init__(self, members: Sequence[FunctionSpec]):
        members = list(members)
        if not members:
            raise SpecError("family must be nonempty", "members")
        dims = {m.dim for m in members}
        if len(dims) != 1:
            raise SpecError("family members must share a dimension", "members")
        self.members = members
        self.dim = dims.pop()
        self.convex = len(members) == 1 and members[0].convex

    def _stack(self, t):
        return np.stack([np.asarray(m.value(t), dtype=float) for m in self.members])

    def value(self, t):
        return self._stack(t).min(axis=0)

    def _active(self, t):
        vals = self._stack(t)
        order = np.sort(vals, axis=0)
        if len(self.members) > 1 and np.any(order[1] - order[0] <= self.crossing_tol):
            raise BreakpointError("crossing of family members")
        return vals.argmin(axis=0)

    def gradient(self, t):
        idx = self._active(t)
        grads = np.stack([np.asarray(m.gradient(t), dtype=float) for m in self.members])
        if self.dim == 1:
            return np.take_along_axis(grads, idx[None], 0)[0]
        return np.take_along_axis(grads, idx[None, ..., None], 0)[0]

    def to_json(self):
        return {"kind": self.kind, "members": [m.to_json() for m in self.members]}


# ---------------------------------------------------------------- operations

def evaluate(spec: FunctionSpec, t, order: int = 0) -> Jet:
    """Value and derivatives of ``spec`` at a single point ``t``.

    The gradient is always returned as a vector of length ``dim`` and the
    Hessian as a ``dim x dim`` matrix, also in one dimension.
    """
    if order not in (0, 1, 2):
        raise SpecError("order must be 0, 1 or 2", "order")
    t = np.asarray(t, dtype=float)
    if spec.dim == 1:
        t = t.reshape(())
    value = float(spec.value(t))
    grad = hess = None
    if order >= 1:
        grad = np.atleast_1d(np.asarray(spec.gradient(t), dtype=float)).copy()
    if order >= 2:
        hess = np.asarray(spec.hessian(t), dtype=float).reshape(spec.dim, spec.dim).copy()
    return Jet(value, grad, hess)


@dataclass
class ConvexityReport:
    ok: bool
    worst_second_difference: float
    minors: Optional[list] = None


def _box_arrays(box, dim):
    box = np.asarray(box, dtype=float)
    if box.shape == (2,):
        box = np.tile(box, (dim, 1))
    if box.shape != (dim, 2) or np.any(box[:, 1] < box[:, 0]):
        raise SpecError("box must be (lo, hi) or one (lo, hi) pair per coordinate", "box")
    return box[:, 0], box[:, 1]


def verify_convexity(spec, box, grid_step, threshold=-1e-8) -> ConvexityReport:
    """Sample second differences on a grid over ``box``.

    Differences f(p + h d) - 2 f(p) + f(p - h d) are taken along every
    coordinate axis and (for dim >= 2) every diagonal e_i +- e_j, at the
    interior grid nodes. Works with any object exposing ``value`` and ``dim``.
    """
    dim = spec.dim
    lo, hi = _box_arrays(box, dim)
    axes = [np.arange(l, h + 0.5 * grid_step, grid_step) for l, h in zip(lo, hi)]
    axes = [a[a <= h + 1e-12] for a, h in zip(axes, hi)]
    h = grid_step
    if dim == 1:
        t = axes[0]
        f = spec.value(t)
        second = f[2:] - 2 * f[1:-1] + f[:-2]
    else:
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
        f = spec.value(grid)
        dirs = [np.eye(dim)[i] for i in range(dim)]
        for i in range(dim):
            for j in range(i + 1, dim):
                dirs.append(np.eye(dim)[i] + np.eye(dim)[j])
                dirs.append(np.eye(dim)[i] - np.eye(dim)[j])
        inner = tuple(slice(1, -1) for _ in range(dim))
        seconds = []
        for d in dirs:
            # neighbour along d on the same grid: shift indices by d
            fp = spec.value(grid[inner] + h * d)
            fm = spec.value(grid[inner] - h * d)
            seconds.append((fp - 2 * f[inner] + fm).ravel())
        second = np.concatenate(seconds)
    worst = float(second.min()) if second.size else 0.0
    minors = spec.leading_minors() if isinstance(spec, QuadFormND) else None
    return ConvexityReport(bool(worst >= threshold), worst, minors)


def _project_box(lo, hi):
    return lambda s: np.clip(s, lo, hi)


def _project_ball(center, radius):
    def project(s):
        d = s - center
        n = np.linalg.norm(d)
        return s if n <= radius else center + d * (radius / n)
    return project


def _minimize_nd(spec, project, inside, x0, tol, maxiter):
    """Damped Newton while iterates stay feasible, else projected gradient."""
    s = x0.copy()
    for _ in range(maxiter):
        g = spec.gradient(s)
        try:
            step = -np.linalg.solve(spec.hessian(s), g)
        except (np.linalg.LinAlgError, NotImplementedError):
            break
        if not np.all(np.isfinite(step)) or g @ step >= 0:
            break
        lam, f0 = 1.0, spec.value(s)
        while spec.value(s + lam * step) > f0 + 1e-4 * lam * (g @ step) and lam > 1e-12:
            lam *= 0.5
        new = s + lam * step
        if not inside(new):
            break
        s = new
        if np.linalg.norm(lam * step) <= tol * (1 + np.linalg.norm(s)):
            if inside(s):
                return s
    # projected gradient with Armijo backtracking along the projection arc
    s = project(s)
    lr = 1.0
    for _ in range(50 * maxiter):
        g = spec.gradient(s)
        f0 = spec.value(s)
        while True:
            cand = project(s - lr * g)
            if spec.value(cand) <= f0 + 1e-4 * g @ (cand - s) or lr < 1e-16:
                break
            lr *= 0.5
        move = np.linalg.norm(cand - s)
        s = cand
        if move <= tol * (1 + np.linalg.norm(s)):
            return s
        lr *= 2.0
    raise ConvergenceError("projected descent exceeded its iteration cap", s, None)


def _prox_newton(spec, c, mu, s, tol, maxiter):
    """argmin f(s) + mu/2 |s - c|^2 by damped Newton; None if it stalls."""
    eye = np.eye(c.size)
    phi = lambda v: spec.value(v) + 0.5 * mu * np.sum((v - c) ** 2)
    for _ in range(maxiter):
        g = spec.gradient(s) + mu * (s - c)
        try:
            step = -np.linalg.solve(spec.hessian(s) + mu * eye, g)
        except np.linalg.LinAlgError:
            return None
        if not np.all(np.isfinite(step)):
            return None
        if g @ step >= 0:
            return s
        lam, f0 = 1.0, phi(s)
        while phi(s + lam * step) > f0 + 1e-4 * lam * (g @ step) and lam > 1e-12:
            lam *= 0.5
        s = s + lam * step
        if np.linalg.norm(lam * step) <= tol * (1 + np.linalg.norm(s)):
            return s
    return None


def _minimize_ball_convex(spec, c, radius, tol, maxiter):
    """Convex minimum over a ball via the proximal weight mu.

    |s(mu) - c| decreases in mu, so the boundary solution is found by
    bisecting mu until the proximal minimizer lands on the sphere.
    """
    s0 = _prox_newton(spec, c, 0.0, c.copy(), tol, maxiter)
    if s0 is not None and np.linalg.norm(s0 - c) <= radius:
        return s0
    lo, hi = 0.0, 1.0
    s = c.copy()
    while True:
        cand = _prox_newton(spec, c, hi, s, tol, maxiter)
        if cand is not None and np.linalg.norm(cand - c) <= radius:
            s = cand
            break
        lo, hi = hi, 2.0 * hi
        if hi > 1e300:
            raise ConvergenceError("proximal weight search overflowed", lo, hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        cand = _prox_newton(spec, c, mid, s, tol, maxiter)
        if cand is None or np.linalg.norm(cand - c) > radius:
            lo = mid
        else:
            hi, s = mid, cand
        if hi - lo <= 1e-15 * hi:
            break
    return s


def infimum(spec: FunctionSpec, box=None, *, center=None, radius=None,
            tol: float = 1e-12, maxiter: int = 200):
    """Minimum of ``spec`` over a box or over a closed ball.

    Pass either ``box`` (``(lo, hi)`` or one pair per coordinate) or
    ``center`` and ``radius``. One-dimensional problems use golden-section
    search (convex specs) or dense sampling refined by golden section
    (otherwise); higher dimensions use damped Newton with a projected-gradient
    fallback. Returns ``(argmin, min)``.
    """
    if (box is None) == (center is None):
        raise SpecError("give exactly one of box or center/radius", "box")
    if spec.dim == 1:
        if box is not None:
            lo, hi = (float(v[0]) for v in _box_arrays(box, 1))
        else:
            c = float(np.asarray(center).reshape(()))
            lo, hi = c - radius, c + radius
        if hi - lo <= 0:
            return np.array(lo), float(spec.value(lo))
        if spec.convex:
            cand, _, _ = golden_section(spec.value, np.array(lo), np.array(hi),
                                        tol=max(tol, 1e-15), maxiter=maxiter)
            cands = [lo, float(cand), hi]
            if spec.smooth:
                # value comparisons are blind inside a sqrt(eps)-flat valley;
                # the derivative is monotone on the whole interval
                polished, ok = bisect_monotone_root(spec.gradient, np.array(lo), np.array(hi))
                if ok:
                    cands.insert(0, float(polished))  # wins ties on flat minima
            cands = np.array(cands)
        else:
            grid = np.linspace(lo, hi, 4097)
            vals = spec.value(grid)
            k = int(np.argmin(vals))
            a, b = grid[max(k - 1, 0)], grid[min(k + 1, grid.size - 1)]
            cand, _, _ = golden_section(spec.value, np.array(a), np.array(b),
                                        tol=max(tol, 1e-15), maxiter=maxiter)
            cands = np.array([lo, float(cand), hi, grid[k]])
        vals = spec.value(cands)
        k = int(np.argmin(vals))
        return np.array(cands[k]), float(vals[k])

    if box is not None:
        lo, hi = _box_arrays(box, spec.dim)
        project = _project_box(lo, hi)
        inside = lambda s: bool(np.all(s >= lo) and np.all(s <= hi))
        x0 = 0.5 * (lo + hi)
    else:
        c = np.asarray(center, dtype=float)
        project = _project_ball(c, radius)
        inside = lambda s: bool(np.linalg.norm(s - c) <= radius * (1 + 1e-12))
        x0 = c.copy()
        if spec.convex:
            try:
                s = _minimize_ball_convex(spec, c, float(radius), tol, maxiter)
                return s, float(spec.value(s))
            except NotImplementedError:
                pass
    s = _minimize_nd(spec, project, inside, x0, tol, maxiter)
    return s, float(spec.value(s))


# ---------------------------------------------------------------- JSON

def from_json(obj) -> FunctionSpec:
    """Build a spec from its JSON form (dict or string)."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON: {exc.msg}", "fn") from None
    if not isinstance(obj, dict):
        raise SpecError("function spec must be a JSON object", "fn")
    if "kind" not in obj:
        raise SpecError("missing field", "kind")
    kind = obj["kind"]

    def need(field):
        if field not in obj:
            raise SpecError(f"{kind} spec is missing a field", field)
        return obj[field]

    try:
        if kind == "sqrt1p":
            return Sqrt1p()
        if kind == "exp":
            return Exp()
        if kind == "poly1d":
            return Poly1D(need("coeffs"))
        if kind == "quadform":
            return QuadFormND(need("Q"), need("b"), need("c"))
        if kind == "shifted_parabola":
            return ShiftedParabola(need("center"), need("offset"))
        if kind == "svc":
            return PiecewiseSVC()
        if kind == "tabulated":
            return Tabulated(need("knots"))
        if kind == "spline":
            return Spline1D(need("xs"), need("ys"), obj.get("slopes"))
        if kind == "radial":
            return Radial(from_json(need("profile")), int(obj.get("dim", 2)))
        if kind == "min":
            return PointwiseMin([from_json(m) for m in need("members")])
    except SpecError:
        raise
    except (TypeError, ValueError) as exc:
        raise SpecError(f"bad value in {kind} spec: {exc}", "kind") from None
    raise SpecError(f"unknown function kind {kind!r}", "kind")


def example_quadform() -> QuadFormND:
    """t1^2 + 20 t1 t2 + 1000 t2^2 - 30 t2 + 1."""
    return QuadFormND([[1.0, 10.0], [10.0, 1000.0]], [0.0, -30.0], 1.0)
