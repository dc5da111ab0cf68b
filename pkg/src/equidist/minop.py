"""Pointwise minima of function families and their equidistant functions.

The minimum's equidistant function is always obtained by scanning the
minimum's own epigraph, never by combining the members' curves, so the
comparisons below are between independent computations.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError, SpecError
from .functions import FunctionSpec, PointwiseMin
from .geometry import Epigraph, FocalSet
from .vertical import DEFAULT_GRID_N, profile

DEFAULT_TOL = 1e-7


def min_family(family) -> PointwiseMin:
    members = list(family)
    if not members:
        raise SpecError("family must be nonempty", "members")
    return PointwiseMin(members)


@dataclass
class MinopReport:
    xs: np.ndarray
    g_min_minus: np.ndarray
    g_min_plus: np.ndarray
    member_minus: np.ndarray  # shape (members, xs)
    member_plus: np.ndarray
    ok: bool
    violations: list = field(default_factory=list)
    max_gap: float = 0.0

    def table(self):
        """Rows x, G_min, G_1, ..., G_k (lower values)."""
        return np.column_stack([self.xs, self.g_min_minus, self.member_minus.T])


def _scans(K, family, xs, grid_n, scan_tol):
    family = list(family)
    members = [profile(xs, K, Epigraph(f), grid_n, scan_tol) for f in family]
    joint = profile(xs, K, Epigraph(min_family(family)), grid_n, scan_tol)
    lo = np.array([[s.g_minus for s in m] for m in members])
    hi = np.array([[s.g_plus for s in m] for m in members])
    return (np.array([s.g_minus for s in joint]), np.array([s.g_plus for s in joint]), lo, hi)


def sandwich_check(K: FocalSet, family, xs, tol: float = DEFAULT_TOL,
                   grid_n: int = DEFAULT_GRID_N, scan_tol: float = 1e-10) -> MinopReport:
    """min_i G_i^- <= G_min^- <= G_min^+ <= min_i G_i^+ at every x, within tol."""
    xs = np.asarray(xs, dtype=float)
    gm, gp, lo, hi = _scans(K, family, xs, grid_n, scan_tol)
    a, d = lo.min(axis=0), hi.min(axis=0)
    violations = []
    for k, x in enumerate(xs):
        chain = (a[k], gm[k], gp[k], d[k])
        for left, right, name in zip(chain, chain[1:], ("min G_i^- <= G_min^-",
                                                         "G_min^- <= G_min^+",
                                                         "G_min^+ <= min G_i^+")):
            if left > right + tol:
                violations.append(f"x={float(x)!r}: {name} fails by {float(left - right)!r}")
    gap = float(np.max(np.maximum.reduce([a - gm, gm - gp, gp - d])))
    return MinopReport(xs, gm, gp, lo, hi, not violations, violations, gap)


def min_commute_check(K: FocalSet, family, xs, tol: float = DEFAULT_TOL,
                      grid_n: int = DEFAULT_GRID_N, scan_tol: float = 1e-10) -> MinopReport:
    """G_min = min_i G_i at every x, given single roots for every member."""
    xs = np.asarray(xs, dtype=float)
    gm, gp, lo, hi = _scans(K, family, xs, grid_n, scan_tol)
    spread = hi - lo
    if np.any(spread > tol):
        i, k = np.unravel_index(np.argmax(spread), spread.shape)
        raise PreconditionError(
            f"member {int(i)} has several equidistant points above x={float(xs[k])!r}")
    diff = np.abs(gm - lo.min(axis=0))
    violations = [f"x={float(x)!r}: |G_min - min G_i| = {float(e)!r}"
                  for x, e in zip(xs, diff) if e > tol]
    return MinopReport(xs, gm, gp, lo, hi, not violations, violations, float(diff.max()))
