"""All equidistant points on vertical lines {x} x R.

The residual d_x(y) = d((x, y), K) - d((x, y), L) is negative far below the
graph and positive on it, so its zeros can be bracketed between an explicit
lower bound and f(x). Scans over many base points run as one batch.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ._numerics import bisect_predicate, bisect_sign
from .errors import GridTooCoarseError, NoBasePointError, SpecError
from .functions import FunctionSpec, infimum
from .geometry import DEFAULT_TOL, Ball, Epigraph, FocalSet, PointCloud

log = logging.getLogger(__name__)

DEFAULT_GRID_N = 1024
ZERO_BAND = 1e-12


@dataclass
class VerticalBounds:
    x: np.ndarray
    lower: float
    upper: float
    u: float
    base_point: np.ndarray


@dataclass
class VerticalScan:
    x: np.ndarray
    roots: np.ndarray
    g_minus: float
    g_plus: float
    bounds: VerticalBounds
    # closed y-intervals on which the residual vanished at consecutive nodes
    clusters: list = field(default_factory=list)


def _as_epigraph(L):
    if isinstance(L, FunctionSpec):
        return Epigraph(L)
    if not hasattr(L, "height"):
        raise SpecError("second focal set must be an epigraph", "L")
    return L


def _base_point(K: FocalSet):
    if isinstance(K, (Ball, PointCloud)):
        return K.lowest_point()
    raise SpecError("first focal set must be a ball or a point cloud", "K")


def _function_of(L):
    return L.f if isinstance(L, FocalSet) else L


def bounds(x, K: FocalSet, f) -> VerticalBounds:
    """Bracket [lower, upper) that contains every equidistant point above x.

    ``f`` may be a FunctionSpec or an epigraph-like focal set; ``upper`` is
    the height of that set's lower boundary at x.
    """
    L = _as_epigraph(f)
    spec = _function_of(L)
    base = _base_point(K)
    xs, ys = base[:-1], float(base[-1])
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.size != xs.size:
        raise SpecError("base point dimension does not match the focal set", "x")
    rad = float(np.linalg.norm(x - xs))
    center = x if spec.dim > 1 else x[0]
    if rad > 0:
        _, u = infimum(spec, center=center, radius=rad)
        # a slightly low u only widens the bracket
        u -= 1e-9 * (1.0 + abs(u))
    else:
        u = float(spec.value(center))
    if not ys < u:
        raise NoBasePointError()
    lower = min((rad * rad + ys * ys - u * u) / (2.0 * (ys - u)), ys)
    upper = float(L.height(center))
    return VerticalBounds(x if spec.dim > 1 else x.copy(), float(lower), upper, float(u), base.copy())


def _points(xs, ys):
    """Stack base points (m, n) with heights of shape (m, ...) into points."""
    ys = np.asarray(ys, dtype=float)
    xb = np.broadcast_to(xs.reshape((xs.shape[0],) + (1,) * (ys.ndim - 1) + (xs.shape[1],)),
                         ys.shape + (xs.shape[1],))
    return np.concatenate([xb, ys[..., None]], axis=-1)


def profile(xs, K: FocalSet, L, grid_n: int = DEFAULT_GRID_N, tol: float = DEFAULT_TOL,
            zero_band: float = ZERO_BAND):
    """Vertical scans at every base point in ``xs``, evaluated as one batch."""
    if grid_n < 2:
        raise SpecError("grid_n must be at least 2", "grid_n")
    L = _as_epigraph(L)
    spec = _function_of(L)
    xs = np.asarray(xs, dtype=float)
    xs = xs.reshape(-1, 1) if spec.dim == 1 else xs.reshape(-1, spec.dim)
    bnds = [bounds(x, K, L) for x in xs]
    lo = np.array([b.lower for b in bnds])
    hi = np.array([b.upper for b in bnds])
    frac = np.linspace(0.0, 1.0, grid_n)
    ys = lo[:, None] + (hi - lo)[:, None] * frac
    res = K.distance(_points(xs, ys), tol) - L.distance(_points(xs, ys), tol)
    sign = np.where(np.abs(res) <= zero_band, 0, np.sign(res)).astype(int)

    def residual_at(rows):
        rx = xs[rows]

        def fun(y):
            p = _points(rx, y)
            return K.distance(p, tol) - L.distance(p, tol)
        return fun

    found = [[] for _ in range(xs.shape[0])]
    # strict sign changes between neighbouring nodes
    rows, cols = np.nonzero(sign[:, :-1] * sign[:, 1:] < 0)
    if rows.size:
        r = bisect_sign(residual_at(rows), ys[rows, cols], ys[rows, cols + 1], tol=tol)
        for i, y in zip(rows, r):
            found[i].append(y)
    # nodes inside the zero band are roots; locate the edges of each band run
    zero = sign == 0
    for i, j in zip(*np.nonzero(zero)):
        found[i].append(ys[i, j])
    for step in (1, -1):
        if step == 1:
            rows, cols = np.nonzero(zero[:, :-1] & ~zero[:, 1:])
            a, b = ys[rows, cols], ys[rows, cols + 1]
        else:
            rows, cols = np.nonzero(~zero[:, :-1] & zero[:, 1:])
            a, b = ys[rows, cols + 1], ys[rows, cols]
        if rows.size:
            fun = residual_at(rows)
            edge = bisect_predicate(lambda y: np.abs(fun(y)) <= zero_band, a, b, tol=tol)
            for i, y in zip(rows, edge):
                found[i].append(y)

    scans = []
    for i, b in enumerate(bnds):
        roots = np.sort(np.array(found[i]))
        if roots.size == 0:
            raise GridTooCoarseError(
                f"no sign change of the residual above x={xs[i].tolist()} on {grid_n} nodes; "
                "increase grid_n")
        keep = np.concatenate([[True], np.diff(roots) > 10 * tol])
        roots = roots[keep]
        clusters = _zero_runs(ys[i], zero[i], roots)
        x_out = xs[i] if spec.dim > 1 else xs[i].copy()
        scans.append(VerticalScan(x_out, roots, float(roots[0]), float(roots[-1]), b, clusters))
    return scans


def _zero_runs(y, zero, roots):
    """Runs of at least two consecutive zero nodes, widened to the bisected edges."""
    runs = []
    j, n = 0, zero.size
    while j < n:
        if not zero[j]:
            j += 1
            continue
        k = j
        while k + 1 < n and zero[k + 1]:
            k += 1
        if k > j:
            lo = y[j]
            if j > 0:
                lo = roots[(roots > y[j - 1]) & (roots <= y[j])].min(initial=lo)
            hi = y[k]
            if k + 1 < n:
                hi = roots[(roots >= y[k]) & (roots < y[k + 1])].max(initial=hi)
            runs.append((float(lo), float(hi)))
        j = k + 1
    return runs


def scan_vertical(x, K: FocalSet, L, grid_n: int = DEFAULT_GRID_N,
                  tol: float = DEFAULT_TOL, zero_band: float = ZERO_BAND) -> VerticalScan:
    return profile([x], K, L, grid_n, tol, zero_band)[0]


def existence_check(K: FocalSet, f: FunctionSpec, box=None) -> bool:
    """Whether K has a point strictly below inf f, with inf f estimated on a box.

    The box defaults to [-50, 50]^n. A minimizer on the box boundary means
    f may keep decreasing outside it; that case is logged as a warning.
    """
    base = _base_point(K)
    if box is None:
        box = [(-50.0, 50.0)] * f.dim
    arg, low = infimum(f, box)
    lo, hi = np.asarray(box, dtype=float).reshape(-1, 2).T
    arg = np.atleast_1d(arg)
    if np.any(np.isclose(arg, lo) | np.isclose(arg, hi)):
        log.warning("infimum estimate sits on the boundary of box %s", np.asarray(box).tolist())
    log.info("existence check used box %s, inf f ~ %r", np.asarray(box).tolist(), low)
    return bool(base[-1] < low)
