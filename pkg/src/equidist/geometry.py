"""Distances from points to focal sets, equidistance residuals, Hausdorff.

Points live in R^(n+1) = R^n x R and are passed as arrays whose trailing
axis holds the coordinates, so a single point has shape ``(n+1,)`` and a
batch has shape ``(..., n+1)``. Every ``distance`` call is vectorized over
the batch.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial import cKDTree

from ._numerics import bisect_monotone_root, golden_section
from .errors import ConvergenceError, SpecError
from .functions import FunctionSpec, PiecewiseSVC, PointwiseMin

DEFAULT_TOL = 1e-10
DEFAULT_MAXITER = 200


@dataclass(frozen=True)
class DistanceResult:
    distance: float
    nearest: Optional[np.ndarray] = None


class FocalSet:
    """Base class; subclasses implement ``_solve`` returning distances and nearest points."""

    dim = 2  # ambient dimension n + 1

    def _points(self, p):
        p = np.asarray(p, dtype=float)
        if p.shape[-1] != self.dim:
            raise SpecError(f"points must have {self.dim} coordinates, got {p.shape[-1]}", "point")
        return p

    def distance(self, p, tol=DEFAULT_TOL):
        return self._solve(self._points(p), tol)[0]

    def nearest(self, p, tol=DEFAULT_TOL):
        return self._solve(self._points(p), tol)[1]

    def _solve(self, p, tol):
        raise NotImplementedError


class Ball(FocalSet):
    """Closed ball; centered at the origin unless ``center`` is given."""

    def __init__(self, radius: float, center=None, dim: int = 2):
        if not radius > 0:
            raise SpecError("radius must be positive", "radius")
        self.radius = float(radius)
        self.center = np.zeros(dim) if center is None else np.asarray(center, dtype=float)
        self.dim = self.center.size

    def lowest_point(self):
        return self.center - self.radius * np.eye(self.dim)[-1]

    def _solve(self, p, tol):
        d = p - self.center
        norm = np.linalg.norm(d, axis=-1)
        dist = np.maximum(norm - self.radius, 0.0)
        safe = np.where(norm > 0, norm, 1.0)
        near = np.where((norm > self.radius)[..., None],
                        self.center + d * (self.radius / safe)[..., None], p)
        return dist, near


class PointCloud(FocalSet):
    def __init__(self, points):
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if pts.size == 0:
            raise SpecError("point cloud must be nonempty", "points")
        self.points = pts
        self.dim = pts.shape[1]
        self._tree = cKDTree(pts)

    def lowest_point(self):
        return self.points[np.argmin(self.points[:, -1])]

    def _solve(self, p, tol):
        dist, idx = self._tree.query(p.reshape(-1, self.dim))
        return dist.reshape(p.shape[:-1]), self.points[idx].reshape(p.shape)


class Epigraph(FocalSet):
    """{(x, y) : y >= f(x)}.

    The distance from an outside point p = (x, y) is sqrt(min_s psi(s)) with
    psi(s) = |x - s|^2 + max(f(s) - y, 0)^2, which holds for any continuous
    f and is convex in s when f is. In one dimension the minimizer lies in
    [x - D, x + D] with D = f(x) - y, since psi(x) = D^2.

    Non-convex one-dimensional f falls back to dense sampling of psi with
    golden-section refinement of the lowest local minima.
    """

    dense_samples = 513

    def __init__(self, f: FunctionSpec, maxiter: int = DEFAULT_MAXITER):
        self.f = f
        self.dim = f.dim + 1
        self.maxiter = maxiter

    def height(self, x):
        return self.f.value(x)

    def _solve(self, p, tol):
        shape = p.shape[:-1]
        flat = p.reshape(-1, self.dim)
        x = flat[:, 0] if self.dim == 2 else flat[:, :-1]
        y = flat[:, -1]
        if isinstance(self.f, PointwiseMin) and all(m.convex for m in self.f.members):
            # the epigraph of a minimum is the union of the member epigraphs
            parts = [Epigraph(m, self.maxiter)._solve(flat, tol) for m in self.f.members]
            dists = np.stack([d for d, _ in parts])
            k = np.argmin(dists, axis=0)
            rows = np.arange(flat.shape[0])
            near = np.stack([n for _, n in parts])[k, rows]
            return dists[k, rows].reshape(shape), near.reshape(p.shape)
        dist = np.zeros(flat.shape[0])
        near = flat.copy()
        gap = self.f.value(x) - y
        out = gap > 0
        if np.any(out):
            if self.dim == 2:
                s = self._project_1d(x[out], y[out], gap[out], tol)
            else:
                s = self._project_nd(x[out], y[out], tol)
            fs = self.f.value(s)
            base = s if self.dim > 2 else s[:, None]
            pt = np.concatenate([base, np.maximum(fs, y[out])[:, None]], axis=1)
            near[out] = pt
            dist[out] = np.linalg.norm(flat[out] - pt, axis=1)
        return dist.reshape(shape), near.reshape(p.shape)

    def _psi(self, x, y):
        f = self.f

        def psi(s):
            lift = np.maximum(f.value(s) - y, 0.0)
            return (s - x) ** 2 + lift * lift
        return psi

    @staticmethod
    def _bracket_1d(psi, x, gap, maxdouble=1100):
        """Expand [x - 2a, x + 2b] by doubling until psi turns upward on both sides.

        For convex psi, psi(x + 2h) >= psi(x + h) rules out minimizers beyond
        x + 2h. Steps never need to exceed gap = f(x) - y, which bounds the
        distance; when f(x) overflows the gap is infinite and only the
        doubling test stops the expansion.
        """
        out = np.empty((2, x.size))
        with np.errstate(over="ignore", invalid="ignore"):
            for k, sign in enumerate((-1.0, 1.0)):
                h = np.minimum(gap, 1.0)
                near = psi(x + sign * h)
                done = h >= gap
                for _ in range(maxdouble):
                    if np.all(done):
                        break
                    far = psi(x + sign * 2 * h)
                    stop = done | (far >= near)
                    h = np.where(stop, h, 2 * h)
                    near = np.where(stop, near, far)
                    done = stop | (h >= gap)
                out[k] = x + sign * np.where(h >= gap, gap, 2 * h)
        return out[0], out[1]

    def _project_1d(self, x, y, gap, tol):
        f = self.f
        psi = self._psi(x, y)
        lo, hi = self._bracket_1d(psi, x, gap)
        if f.convex and f.smooth:
            # psi'/2 is increasing, so bisection reaches machine precision
            def half_slope(s):
                with np.errstate(over="ignore", invalid="ignore"):
                    lift = np.maximum(f.value(s) - y, 0.0)
                    return (s - x) + np.where(lift > 0, lift * f.gradient(s), 0.0)
            s, _ = bisect_monotone_root(half_slope, lo, hi, maxiter=2 * self.maxiter)
            return s
        if f.convex:
            s, _, _ = golden_section(psi, lo, hi, tol=tol, maxiter=self.maxiter)
            return s
        # without convexity the doubling test proves nothing; keep [x - D, x + D]
        finite = np.isfinite(gap)
        lo = np.where(finite, x - gap, lo)
        hi = np.where(finite, x + gap, hi)
        return self._project_1d_dense(x, y, lo, hi, psi, tol)

    def _project_1d_dense(self, x, y, lo, hi, psi, tol, chunk=2048):
        # Non-convex f: sample psi, then refine the lowest discrete minima.
        m = self.dense_samples
        out = np.empty_like(x)
        frac = np.linspace(0.0, 1.0, m)
        for start in range(0, x.size, chunk):
            sl = slice(start, start + chunk)
            a, b = lo[sl, None], hi[sl, None]
            grid = a + (b - a) * frac
            vals = self._psi(x[sl, None], y[sl, None])(grid)
            interior = (vals[:, 1:-1] <= vals[:, :-2]) & (vals[:, 1:-1] <= vals[:, 2:])
            score = np.where(interior, vals[:, 1:-1], np.inf)
            order = np.argsort(score, axis=1)[:, :4] + 1
            rows = np.arange(grid.shape[0])
            best = grid[rows, np.argmin(vals, axis=1)]
            best_val = vals.min(axis=1)
            for j in range(order.shape[1]):
                k = order[:, j]
                ok = np.isfinite(score[rows, k - 1])
                ga = grid[rows, k - 1]
                gb = grid[rows, k + 1]
                psi_row = self._psi(x[sl], y[sl])
                cand, _, _ = golden_section(psi_row, ga, gb, tol=tol, maxiter=self.maxiter)
                cv = psi_row(cand)
                better = ok & (cv < best_val)
                best = np.where(better, cand, best)
                best_val = np.where(better, cv, best_val)
            out[sl] = best
        return out

    def _project_nd(self, x, y, tol):
        """Damped Newton on psi/2, all rows in lock step."""
        f = self.f
        n = x.shape[1]
        eye = np.eye(n)
        s = x.copy()
        done = np.zeros(x.shape[0], dtype=bool)

        def half_psi(s, x, y):
            lift = np.maximum(f.value(s) - y, 0.0)
            return 0.5 * (np.sum((s - x) ** 2, axis=1) + lift * lift)

        for _ in range(self.maxiter):
            act = ~done
            if not np.any(act):
                break
            sa, xa, ya = s[act], x[act], y[act]
            lift = np.maximum(f.value(sa) - ya, 0.0)
            grad_f = f.gradient(sa)
            g = (sa - xa) + lift[:, None] * grad_f
            on = (lift > 0)[:, None, None]
            hess = eye + on * (grad_f[:, :, None] * grad_f[:, None, :]
                               + lift[:, None, None] * f.hessian(sa))
            step = -np.linalg.solve(hess, g[..., None])[..., 0]
            base = half_psi(sa, xa, ya)
            slope = np.sum(g * step, axis=1)
            lam = np.ones(sa.shape[0])
            for _ in range(60):
                trial = half_psi(sa + lam[:, None] * step, xa, ya)
                bad = trial > base + 1e-4 * lam * slope
                if not np.any(bad):
                    break
                lam = np.where(bad, 0.5 * lam, lam)
            move = lam[:, None] * step
            s[act] = sa + move
            small = np.linalg.norm(move, axis=1) <= tol * (1.0 + np.linalg.norm(sa, axis=1))
            idx = np.flatnonzero(act)
            done[idx[small]] = True
        if not np.all(done):
            raise ConvergenceError("epigraph projection did not converge",
                                   s[~done][0], None)
        return s


class TrimmedEpigraph(FocalSet):
    """Epigraph of the convex scene function with disk segments cut away.

    The scene boundary is a ray of slope -sqrt(3), an arc of the circle of
    radius R about Q2 = ``f.center`` and a horizontal ray. Each chord is a
    pair of points on the arc; the open disk segment beyond it is removed
    while the chord itself stays in the set. Distances are exact: minimum
    over rays, kept arc pieces (angular clamping) and chords.
    """

    def __init__(self, f: PiecewiseSVC, chords=()):
        if not isinstance(f, PiecewiseSVC):
            raise SpecError("trimmed epigraph needs the piecewise scene function", "f")
        self.f = f
        self.dim = 2
        q = f.center
        self.left_point = np.array([f.left_break, float(f.value(f.left_break))])
        self.right_point = np.array([f.right_break, f.flat_height])
        self.left_dir = np.array([-0.5, 0.5 * math.sqrt(3.0)])
        self.arc_lo = self._angle(self.left_point)
        self.arc_hi = self._angle(self.right_point)
        chords = [tuple(np.asarray(c, dtype=float) for c in ch) for ch in chords]
        spans = sorted((min(self._angle(a), self._angle(b)), max(self._angle(a), self._angle(b)), a, b)
                       for a, b in chords)
        for (lo1, hi1, *_), (lo2, *_rest) in zip(spans, spans[1:]):
            if lo2 <= hi1:
                raise SpecError("chords must be pairwise disjoint", "chords")
        self.chords = [(a, b) for *_x, a, b in spans]
        self.chord_angles = np.array([[lo, hi] for lo, hi, *_x in spans]).reshape(-1, 2)
        pieces, start = [], self.arc_lo
        for lo, hi in self.chord_angles:
            pieces.append((start, lo))
            start = hi
        pieces.append((start, self.arc_hi))
        self.kept_arcs = pieces
        self._q = q

    def _angle(self, pt):
        d = np.asarray(pt) - self.f.center
        return float(np.mod(math.atan2(d[1], d[0]), 2 * math.pi))

    def _chord_lines(self):
        # (normal, offset) with normal . p >= offset on the Q2 side
        out = []
        for a, b in self.chords:
            tangent = b - a
            normal = np.array([-tangent[1], tangent[0]])
            if normal @ (self._q - a) < 0:
                normal = -normal
            out.append((normal, float(normal @ a)))
        return out

    def height(self, x):
        """Lower boundary of the trimmed set: f, or the chord line over its span."""
        x = np.asarray(x, dtype=float)
        h = self.f.value(x)
        for a, b in self.chords:
            lo, hi = sorted((a[0], b[0]))
            chord = a[1] + (b[1] - a[1]) * (x - a[0]) / (b[0] - a[0])
            h = np.where((x >= lo) & (x <= hi), chord, h)
        return h

    def contains(self, p):
        p = self._points(p)
        inside = p[..., 1] >= self.f.value(p[..., 0])
        for normal, offset in self._chord_lines():
            inside &= p @ normal >= offset
        return inside

    @staticmethod
    def _to_ray(p, origin, direction):
        lam = np.maximum((p - origin) @ direction, 0.0)
        pt = origin + lam[..., None] * direction
        return np.linalg.norm(p - pt, axis=-1), pt

    @staticmethod
    def _to_segment(p, a, b):
        d = b - a
        lam = np.clip((p - a) @ d / (d @ d), 0.0, 1.0)
        pt = a + lam[..., None] * d
        return np.linalg.norm(p - pt, axis=-1), pt

    def _to_arc(self, p, lo, hi):
        q, R = self._q, self.f.R
        d = p - q
        ang = np.mod(np.arctan2(d[..., 1], d[..., 0]), 2 * math.pi)
        ang = np.clip(ang, lo, hi)
        pt = q + R * np.stack([np.cos(ang), np.sin(ang)], axis=-1)
        return np.linalg.norm(p - pt, axis=-1), pt

    def _solve(self, p, tol):
        cands = [self._to_ray(p, self.left_point, self.left_dir),
                 self._to_ray(p, self.right_point, np.array([1.0, 0.0]))]
        cands += [self._to_arc(p, lo, hi) for lo, hi in self.kept_arcs]
        cands += [self._to_segment(p, a, b) for a, b in self.chords]
        dists = np.stack([c[0] for c in cands])
        pts = np.stack([c[1] for c in cands])
        k = np.argmin(dists, axis=0)
        dist = np.take_along_axis(dists, k[None], 0)[0]
        near = np.take_along_axis(pts, k[None, ..., None], 0)[0]
        inside = self.contains(p)
        dist = np.where(inside, 0.0, dist)
        near = np.where(inside[..., None], p, near)
        return dist, near


def dist_point_set(p, S: FocalSet, tol: float = DEFAULT_TOL) -> DistanceResult:
    if not tol > 0:
        raise SpecError("tolerance must be positive", "tol")
    p = S._points(p)
    dist, near = S._solve(p, tol)
    if p.ndim == 1:
        return DistanceResult(float(dist), np.asarray(near))
    return DistanceResult(dist, near)


def equidistant_residual(p, K: FocalSet, L: FocalSet, tol: float = DEFAULT_TOL):
    """d(p, K) - d(p, L); negative means p is nearer to K."""
    r = K.distance(p, tol) - L.distance(p, tol)
    return float(r) if np.ndim(r) == 0 else r


def hausdorff(A, B) -> float:
    A = np.atleast_2d(np.asarray(A, dtype=float))
    B = np.atleast_2d(np.asarray(B, dtype=float))
    if A.size == 0 or B.size == 0:
        raise SpecError("point sets must be nonempty", "points")
    if A.shape[1] != B.shape[1]:
        raise SpecError(f"dimension mismatch: {A.shape[1]} vs {B.shape[1]}", "points")
    ab = cKDTree(B).query(A)[0].max()
    ba = cKDTree(A).query(B)[0].max()
    return float(max(ab, ba))
