"""Equidistant graphs over R^n for a sphere about the origin and an epigraph.

The closed form mirrors the planar one with the gradient in place of f'.
Admissible parameters are explored along rays t = r u, where the restriction
phi(r) = f(r u) gives a one-dimensional slit function whose own admissible
interval sits inside the ray's admissible set.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from ._numerics import bisect_predicate, central_difference
from .circle import _first_critical
from .errors import (ContainmentError, CriticalParameterError, DisjointnessError,
                     NotParameterizationError, SpecError)
from .functions import FunctionSpec


@dataclass(frozen=True)
class ParamSampleND:
    t: np.ndarray
    x: np.ndarray
    y: float
    s: float
    alpha: float
    g: np.ndarray
    r: float


@dataclass
class Patch:
    """Samples over a tensor grid; arrays carry the grid shape in front."""

    R: float
    axes: tuple
    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    s: np.ndarray
    alpha: np.ndarray
    g: np.ndarray
    r: np.ndarray


@dataclass(frozen=True)
class RaySegments:
    direction: np.ndarray
    segments: list
    t_u_plus: float


def _as_points(f, t):
    t = np.asarray(t, dtype=float)
    if f.dim == 1 and (t.ndim == 0 or t.shape[-1] != 1):
        t = t[..., None]
    if t.shape[-1] != f.dim:
        raise SpecError(f"parameter must have {f.dim} coordinates", "t")
    return t


def _eval(f, t):
    """Value and gradient with a trailing coordinate axis, for any dimension."""
    if f.dim == 1:
        tt = t[..., 0]
        return f.value(tt), np.asarray(f.gradient(tt))[..., None]
    return f.value(t), f.gradient(t)


def alpha_nd(f: FunctionSpec, t):
    """Signed distance from the origin to the tangent hyperplane at t."""
    t = _as_points(f, t)
    fv, grad = _eval(f, t)
    return (np.sum(t * grad, axis=-1) - fv) / np.sqrt(1.0 + np.sum(grad * grad, axis=-1))


def _columns_nd(f, R, t, check=True):
    t = _as_points(f, t)
    fv, grad = _eval(f, t)
    w = np.sqrt(1.0 + np.sum(grad * grad, axis=-1))
    tt = np.sum(t * t, axis=-1)
    a = (np.sum(t * grad, axis=-1) - fv) / w
    if check:
        if np.any(~(a < R)):
            raise CriticalParameterError("critical parameter on the grid: alpha >= R")
        if np.any(tt + fv * fv <= R * R):
            raise DisjointnessError("graph point inside the sphere")
    s = 0.5 * (tt + fv * fv - R * R) / (R - a)
    x = t + (s / w)[..., None] * grad
    y = fv - s / w
    r = np.sqrt(np.sum(x * x, axis=-1) + y * y)
    g = (x - t) / (r - R)[..., None]
    if check and np.any(np.abs(r - R - s) > 1e-9 * np.maximum(1.0, s)):
        raise AssertionError("common distance mismatch: r - R differs from s")
    return t, x, y, s, a, g, r


def equidistant_point_nd(f: FunctionSpec, R: float, t) -> ParamSampleND:
    t, x, y, s, a, g, r = _columns_nd(f, R, np.asarray(t, dtype=float))
    return ParamSampleND(t.copy(), x.copy(), float(y), float(s), float(a), g.copy(), float(r))


def trace_patch(f: FunctionSpec, R: float, axes) -> Patch:
    """Samples on the tensor grid spanned by one 1D array per coordinate."""
    axes = tuple(np.asarray(a, dtype=float) for a in axes)
    if len(axes) != f.dim:
        raise SpecError(f"need {f.dim} grid axes", "axes")
    t = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
    return Patch(R, axes, *_columns_nd(f, R, t))


def slit_alpha(f: FunctionSpec, u, r):
    """alpha of phi(r) = f(r u): (r phi' - phi) / sqrt(1 + phi'^2)."""
    u = np.asarray(u, dtype=float)
    r = np.asarray(r, dtype=float)
    pts = r[..., None] * u
    fv, grad = _eval(f, pts)
    dphi = grad @ u
    return (r * dphi - fv) / np.hypot(1.0, dphi)


def ray_admissible_segments(f: FunctionSpec, R: float, u, r_max: float,
                            grid_n: int = 4096, tol: float = 1e-10,
                            search_radius: float = 1e3) -> RaySegments:
    """Maximal intervals of [0, r_max] on which alpha(r u) < R.

    Boundaries come from bisection between grid nodes. The slit critical
    value t_u_plus (searched up to ``search_radius``) bounds the first
    segment from inside; a grid node below it that fails the test raises
    ContainmentError.
    """
    u = np.asarray(u, dtype=float)
    if not math.isclose(float(np.linalg.norm(u)), 1.0, rel_tol=0, abs_tol=1e-12):
        raise SpecError("direction must be a unit vector", "u")
    if not r_max > 0:
        raise SpecError("r_max must be positive", "r_max")

    def ok(r):
        return alpha_nd(f, np.asarray(r)[..., None] * u) < R

    rs = np.linspace(0.0, r_max, grid_n)
    adm = ok(rs)
    flips = np.flatnonzero(adm[:-1] != adm[1:])
    edges = bisect_predicate(ok, rs[flips], rs[flips + 1], tol=tol) if flips.size else np.array([])
    bounds = [0.0] if adm[0] else []
    bounds += [float(e) for e in np.atleast_1d(edges)]
    if adm[-1]:
        bounds.append(float(r_max))
    segments = [(bounds[i], bounds[i + 1]) for i in range(0, len(bounds), 2)]

    with np.errstate(over="ignore", invalid="ignore"):
        t_u = _first_critical(lambda r: ~(slit_alpha(f, u, r) < R), search_radius, tol)
    inner = rs < t_u
    if np.any(inner & ~adm):
        r_bad = float(rs[np.argmax(inner & ~adm)])
        raise ContainmentError(f"r={r_bad!r} is slit-admissible but critical for f")
    return RaySegments(u.copy(), segments, t_u)


def _gap(patch, R):
    if R is None:
        return patch.s, patch.R
    return np.sqrt(np.sum(patch.x ** 2, axis=-1) + patch.y ** 2) - R, R


def compatibility_residual_nd(patch: Patch, R=None, order=2):
    """<g - x/r, d_i x> - (sqrt(1 - |g|^2) + y/r) d_i y at interior nodes.

    Partial derivatives are central differences along each grid axis
    (stencil ``order`` 2, 4 or 6); g and r are recomputed from (t, x, y).
    Returns shape interior_grid + (n,).
    """
    R = patch.R if R is None else R
    x, y, t = patch.x, patch.y, patch.t
    n = x.shape[-1]
    k = order // 2
    r = np.sqrt(np.sum(x * x, axis=-1) + y * y)
    g = (x - t) / (r - R)[..., None]
    coef = np.sqrt(np.clip(1.0 - np.sum(g * g, axis=-1), 0.0, None)) + y / r
    inner = tuple(slice(k, m - k) for m in y.shape)
    out = []
    for i, ax in enumerate(patch.axes):
        h = ax[1] - ax[0]
        # trim every other grid axis to the interior as well
        others = tuple(slice(None) if j == i else inner[j] for j in range(n))
        dx = central_difference(x[others], h, axis=i, order=order)
        dy = central_difference(y[others], h, axis=i, order=order)
        out.append(np.sum((g - x / r[..., None])[inner] * dx, axis=-1) - coef[inner] * dy)
    return np.stack(out, axis=-1)


def perturb_y(patch: Patch, factor: float) -> Patch:
    return replace(patch, y=patch.y * factor)


def reconstruct_f_nd(samples, R=None):
    """Recover (t, f(t), grad f(t)) from samples carrying t, x, y, g, s (or R)."""
    if isinstance(samples, Patch):
        t, g, y = samples.t, samples.g, samples.y
        gap = _gap(samples, R)[0]
    else:
        rows = [samples] if isinstance(samples, ParamSampleND) else list(samples)
        t = np.array([p.t for p in rows], dtype=float)
        g = np.array([p.g for p in rows], dtype=float)
        y = np.array([p.y for p in rows], dtype=float)
        if R is None:
            gap = np.array([p.s for p in rows], dtype=float)
        else:
            x = np.array([p.x for p in rows], dtype=float)
            gap = np.sqrt(np.sum(x * x, axis=-1) + y * y) - R
    norm2 = np.sum(g * g, axis=-1)
    if np.any(norm2 >= 1.0):
        raise NotParameterizationError("|g| >= 1: samples cannot come from an equidistant parameterization")
    root = np.sqrt(1.0 - norm2)
    return t, y + gap * root, g / root[..., None]


def jacobian_det(f: FunctionSpec, R: float, t, h=None):
    """Determinant of the finite-difference Jacobian of t -> x(t)."""
    t = _as_points(f, t)
    n = t.shape[-1]
    h = 1e-6 * np.maximum(1.0, np.linalg.norm(t, axis=-1)) if h is None else np.asarray(h)
    cols = []
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        step = h[..., None] * e
        xp = _columns_nd(f, R, t + step, check=False)[1]
        xm = _columns_nd(f, R, t - step, check=False)[1]
        cols.append((xp - xm) / (2 * h[..., None]))
    return np.linalg.det(np.stack(cols, axis=-1))


def monotone_pairs(points, values):
    """Smallest <F(a) - F(b), a - b> / |a - b|^2 over all sampled pairs.

    Nonnegative exactly when the sampled field is a monotone operator; this
    is the reading adopted for "monotone increasing" of a vector field.
    """
    a = np.asarray(points, dtype=float).reshape(-1, np.shape(points)[-1])
    v = np.asarray(values, dtype=float).reshape(a.shape)
    da = a[:, None, :] - a[None, :, :]
    dv = v[:, None, :] - v[None, :, :]
    num = np.sum(da * dv, axis=-1)
    den = np.sum(da * da, axis=-1)
    mask = den > 0
    return float((num[mask] / den[mask]).min()) if np.any(mask) else 0.0
