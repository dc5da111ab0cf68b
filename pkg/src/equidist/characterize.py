"""Decide whether a given G is the equidistant function of a ball and an epigraph.

The map h sends a base point x to the foot parameter t on the would-be
focal graph. Inverting it yields x(t), y(t) = G(x(t)) and from there the
candidate f. The verdict combines sampled versions of the sufficient
conditions with a direct distance comparison against the recovered f.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._numerics import bisect_monotone_root, bisect_sign
from .circle import Curve
from .errors import ConvergenceError, InsideFocalSphereError, SpecError
from .functions import FunctionSpec, Radial, Spline1D
from .geometry import Ball, Epigraph
from .sphere import monotone_pairs


@dataclass
class CharacterizationReport:
    ok: bool
    h_injective_on_grid: bool
    conditions: dict
    recovered_f: list
    worst_equidistance_residual: float
    compatibility_residual: float = float("nan")
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "ok": self.ok,
            "h_injective_on_grid": self.h_injective_on_grid,
            "conditions": dict(self.conditions),
            "recovered_f": [[np.asarray(t).tolist(), float(v)] for t, v in self.recovered_f],
            "worst_equidistance_residual": self.worst_equidistance_residual,
            "compatibility_residual": self.compatibility_residual,
            "failures": list(self.failures),
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------- G from curves

def curve_to_G(curve: Curve) -> Spline1D:
    """Hermite interpolant through a traced curve.

    Slopes at the knots are exact: along an equidistant curve
    dy/dx = (g - x/r) / (sqrt(1 - g^2) + y/r).
    """
    x, y, r, R = curve.x, curve.y, np.hypot(curve.x, curve.y), curve.R
    g = (x - curve.t) / (r - R)
    slope = (g - x / r) / (np.sqrt(1.0 - g * g) + y / r)
    return Spline1D(x, y, slope)


def radial_G(curve: Curve, dim: int = 2) -> Radial:
    """G on R^dim for a radially symmetric f, from the curve of its profile."""
    return Radial(curve_to_G(curve), dim)


# ---------------------------------------------------------------- h and its inverse

def h_map(G: FunctionSpec, R: float, x):
    """Foot parameter attached to the base point x; raises inside the sphere."""
    x = np.asarray(x, dtype=float)
    Gv, dG = G.value(x), G.gradient(x)
    if G.dim == 1:
        rho = np.hypot(x, Gv)
        if np.any(rho <= R):
            raise InsideFocalSphereError("(x, G(x)) lies inside the focal sphere")
        return x - (rho - R) / rho * (x * (1 - dG * dG) + 2 * Gv * dG) / (1 + dG * dG)
    rho = np.sqrt(np.sum(x * x, axis=-1) + Gv * Gv)
    if np.any(rho <= R):
        raise InsideFocalSphereError("(x, G(x)) lies inside the focal sphere")
    n2 = np.sum(dG * dG, axis=-1)
    coef = 2 * (Gv - np.sum(x * dG, axis=-1)) / (1 + n2)
    return x - ((rho - R) / rho)[..., None] * (x + coef[..., None] * dG)


def _default_box(G, box):
    if box is not None:
        return np.asarray(box, dtype=float).reshape(-1, 2)
    inner = G.profile if isinstance(G, Radial) else G
    if isinstance(inner, Spline1D):
        lim = max(abs(inner.lo), abs(inner.hi))
        if G.dim == 1:
            return np.array([[inner.lo, inner.hi]])
        return np.tile([-lim, lim], (G.dim, 1))
    return np.tile([-50.0, 50.0], (G.dim, 1))


def invert_h(G: FunctionSpec, R: float, t, box=None, samples: int = 4097,
             tol: float = 1e-10, maxiter: int = 100):
    """x with h(x) = t.

    One dimension: bracket on a sampled grid over ``box`` and bisect to
    machine precision. Higher dimensions: Newton with a finite-difference
    Jacobian (step 1e-6 (1 + |x|)) and backtracking on |h(x) - t|.
    """
    box = _default_box(G, box)
    if G.dim == 1:
        return _invert_1d(G, R, np.asarray(t, dtype=float), box[0], samples, tol)
    return _invert_nd(G, R, np.asarray(t, dtype=float), tol, maxiter)


def _invert_1d(G, R, t, box, samples, tol):
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    xs = np.linspace(box[0], box[1], samples)
    hs = h_map(G, R, xs)
    diff = hs[None, :] - t[:, None]
    cross = diff[:, :-1] * diff[:, 1:] <= 0
    if not np.all(cross.any(axis=1)):
        bad = t[~cross.any(axis=1)]
        raise ConvergenceError(
            f"t={float(bad[0])!r} outside the sampled range of h "
            f"[{float(hs.min())!r}, {float(hs.max())!r}] over x in {box.tolist()}",
            float(hs.min()), float(hs.max()))
    k = np.argmax(cross, axis=1)
    lo, hi = xs[k], xs[k + 1]
    rising = hs[k + 1] >= hs[k]

    def signed(x):
        return np.where(rising, 1.0, -1.0) * (h_map(G, R, x) - t)
    x, _ = bisect_monotone_root(signed, lo, hi)
    res = np.abs(h_map(G, R, x) - t)
    if np.any(res > tol * np.maximum(1.0, np.abs(t))):
        # h not monotone inside the cell; fall back to plain sign bisection
        x = bisect_sign(lambda z: h_map(G, R, z) - t, lo, hi, tol=1e-15)
    return float(x[0]) if scalar else x


def _invert_nd(G, R, t, tol, maxiter):
    single = t.ndim == 1
    t = np.atleast_2d(t)
    x = t.copy()
    n = t.shape[1]
    for _ in range(maxiter):
        res = h_map(G, R, x) - t
        err = np.linalg.norm(res, axis=1)
        if np.all(err <= tol * np.maximum(1.0, np.linalg.norm(t, axis=1))):
            return x[0] if single else x
        step_h = 1e-6 * (1.0 + np.linalg.norm(x, axis=1))
        jac = np.empty(x.shape + (n,))
        for i in range(n):
            e = np.zeros(n)
            e[i] = 1.0
            dp = h_map(G, R, x + step_h[:, None] * e)
            dm = h_map(G, R, x - step_h[:, None] * e)
            jac[:, :, i] = (dp - dm) / (2 * step_h[:, None])
        try:
            step = -np.linalg.solve(jac, res[..., None])[..., 0]
        except np.linalg.LinAlgError:
            raise ConvergenceError("singular Jacobian of h", x, None) from None
        lam = np.ones(x.shape[0])
        for _ in range(40):
            trial = x + lam[:, None] * step
            try:
                terr = np.linalg.norm(h_map(G, R, trial) - t, axis=1)
            except InsideFocalSphereError:
                terr = np.full(x.shape[0], np.inf)
            worse = terr > (1 - 1e-4 * lam) * err
            if not np.any(worse & (err > 0)):
                break
            lam = np.where(worse, 0.5 * lam, lam)
        x = x + lam[:, None] * step
    raise ConvergenceError("Newton inversion of h did not converge", x, None)


# ---------------------------------------------------------------- verdict

def _fd_xy(G, R, t, step, box):
    """x, y at t and their partials in t by central differences of fresh inversions."""
    if G.dim == 1:
        xp, xm = (invert_h(G, R, t + s, box) for s in (step, -step))
        return (xp - xm) / (2 * step), (G.value(xp) - G.value(xm)) / (2 * step)
    n = G.dim
    dxs, dys = [], []
    for i in range(n):
        e = np.zeros(n)
        e[i] = step
        xp, xm = invert_h(G, R, t + e, box), invert_h(G, R, t - e, box)
        dxs.append((xp - xm) / (2 * step))
        dys.append((G.value(xp) - G.value(xm)) / (2 * step))
    return np.stack(dxs, axis=-1), np.stack(dys, axis=-1)


def is_equidistant_function(G: FunctionSpec, R: float, grid=None, tol: float = 1e-6,
                            box=None, fd_step: float = 1e-3, compat_tol: float = 1e-5,
                            oracle: bool = True) -> CharacterizationReport:
    """Sampled characterization of G as an equidistant function for Ball{R}.

    ``grid`` holds foot parameters t (a 1D array, or an (m, n) array of
    points). It defaults to 201 points spread over 90% of the sampled range
    of h (one dimension only). Conditions checked at every node: (i) r > R,
    (ii) 1 > g^2 + (1 - sgn y)/2 * y^2/(r - R)^2, (iii) g/sqrt(1 - g^2)
    increasing (monotone operator in n dimensions) together with a
    compatibility residual at most ``compat_tol``. The recovered f must be
    positive and convex, and the distances of each (x, y) to the ball and to
    the recovered epigraph must agree within ``tol``.
    """
    notes, failures = [], []
    nd = G.dim > 1
    box_arr = _default_box(G, box)
    if grid is None:
        if nd:
            raise SpecError("a grid of foot parameters is required in n dimensions", "grid")
        hs = h_map(G, R, np.linspace(box_arr[0, 0], box_arr[0, 1], 4097))
        lo, hi = hs.min(), hs.max()
        mid, half = 0.5 * (lo + hi), 0.45 * (hi - lo)
        grid = np.linspace(mid - half, mid + half, 201)
        notes.append(f"grid covers 90% of the sampled range of h, [{lo!r}, {hi!r}]")
    t = np.asarray(grid, dtype=float)
    if nd:
        t = t.reshape(-1, G.dim)
    else:
        t = np.sort(t.ravel())
    notes.append("range of h certified only on the sampled hull of the grid")

    x = invert_h(G, R, t, box)
    y = G.value(x)
    if nd:
        r = np.sqrt(np.sum(x * x, axis=-1) + y * y)
        g = (x - t) / (r - R)[:, None]
        g2 = np.sum(g * g, axis=-1)
    else:
        r = np.hypot(x, y)
        g = (x - t) / (r - R)
        g2 = g * g

    # injectivity of h on the sampled hull
    if nd:
        injective = bool(monotone_pairs(t, x) > 0)
    else:
        injective = bool(np.all(np.diff(x) > 0))
        xs = np.linspace(x.min(), x.max(), 4097)
        hs = h_map(G, R, xs)
        injective = injective and bool(np.all(np.diff(hs) > 0))
    if not injective:
        failures.append("h is not injective on the sampled grid")

    cond_i = bool(np.all(r > R))
    gap = r - R
    cond_ii = bool(np.all(1.0 > g2 + 0.5 * (1 - np.sign(y)) * y * y / (gap * gap)))
    with np.errstate(invalid="ignore", divide="ignore"):
        root = np.sqrt(1.0 - g2)
        F = g / (root[:, None] if nd else root)
    if nd:
        mono = monotone_pairs(t, F)
        notes.append("vector monotonicity read as <F(a) - F(b), a - b> >= 0 on sampled pairs")
        increasing = bool(mono >= -tol)
    else:
        increasing = bool(np.all(np.diff(F) > 0))
    dx, dy = _fd_xy(G, R, t, fd_step, box)
    if nd:
        coef = (root + y / r)[:, None]
        compat = np.einsum("mi,mij->mj", g - x / r[:, None], dx) - coef * dy
    else:
        compat = (g - x / r) * dx - (root + y / r) * dy
    compat_max = float(np.nanmax(np.abs(compat)))
    cond_iii = increasing and compat_max <= compat_tol
    for flag, name in ((cond_i, "(i) r > R"), (cond_ii, "(ii) bound on g"),
                       (increasing, "(iii) g/sqrt(1-g^2) not increasing"),
                       (compat_max <= compat_tol, "(iii) compatibility residual above tolerance")):
        if not flag:
            failures.append(name)

    coef_pos = bool(np.all(root + y / r > 0))
    fval = y + gap * root
    positive = bool(np.all(fval > 0))
    if not positive:
        failures.append("recovered f is not positive")
    convex = _first_order_convex(t, fval, F, tol)
    if not convex:
        failures.append("recovered f is not convex on the grid")

    residual = float("nan")
    if oracle and cond_i and np.all(g2 < 1):
        residual = _oracle_residual(t, x, y, fval, F, R, nd)
        if not residual <= tol:
            failures.append("distance to the ball and to the recovered epigraph differ")
    ok = bool(injective and cond_i and cond_ii and cond_iii and positive and convex
              and residual <= tol)
    recovered = [(tt.copy() if nd else float(tt), float(v)) for tt, v in zip(t, fval)]
    report = CharacterizationReport(ok, injective, {"i": cond_i, "ii": cond_ii, "iii": cond_iii},
                                    recovered, residual, compat_max, failures, notes)
    report.notes.append(f"sqrt(1-|g|^2) + y/r > 0 at every node: {coef_pos}")
    return report


def _first_order_convex(t, fval, F, tol):
    """f(b) >= f(a) + <f'(a), b - a> - tol for every sampled pair."""
    t2 = t.reshape(t.shape[0], -1)
    F2 = np.asarray(F).reshape(t2.shape)
    if not np.all(np.isfinite(F2)):
        return False
    diff = t2[None, :, :] - t2[:, None, :]
    gap = fval[None, :] - fval[:, None] - np.sum(F2[:, None, :] * diff, axis=-1)
    return bool(gap.min() >= -tol * (1.0 + np.abs(fval).max()))


def _oracle_residual(t, x, y, fval, F, R, nd):
    """Worst |d(p, Ball) - d(p, recovered epigraph)| over the samples.

    One dimension: the recovered f is rebuilt as a Hermite spline and the
    epigraph distance is computed by brute force. Higher dimensions: the
    foot (t, f(t)) is certified as the projection by the normal condition,
    which suffices once f is convex.
    """
    if not nd:
        pts = np.column_stack([x, y])
        spec = Spline1D(t, fval, F)
        d_ball = Ball(R).distance(pts)
        d_epi = Epigraph(spec).distance(pts)
        return float(np.max(np.abs(d_ball - d_epi)))
    pts = np.column_stack([x, y])
    d_ball = Ball(R, dim=t.shape[1] + 1).distance(pts)
    foot = np.column_stack([t, fval])
    v = pts - foot
    d_foot = np.linalg.norm(v, axis=1)
    normal = np.column_stack([F, -np.ones(t.shape[0])])
    normal /= np.linalg.norm(normal, axis=1)[:, None]
    # component of p - foot orthogonal to the outward normal of the graph
    tangential = v - np.sum(v * normal, axis=1)[:, None] * normal
    return float(np.max(np.abs(d_ball - d_foot) + np.linalg.norm(tangential, axis=1)))
