"""Vectorized bracketing primitives: golden-section search and bisection.

Every routine works elementwise over arrays of independent brackets so that
whole grids of problems advance in lock step.
"""
import math

import numpy as np

from .errors import ConvergenceError

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
EPS = np.finfo(float).eps


def _width_ok(a, b, tol):
    scale = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
    return np.abs(b - a) <= np.maximum(tol * scale, 4.0 * EPS * scale)


def golden_section(fun, lo, hi, tol=1e-10, maxiter=200):
    """Minimize a unimodal ``fun`` on each bracket ``[lo, hi]``.

    ``fun`` receives an array with the shape of ``lo`` and must return values
    of the same shape. Returns ``(xmin, a, b)`` where ``[a, b]`` is the final
    bracket; the tolerance is relative to ``max(1, |x|)``.
    """
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc = np.asarray(fun(c), dtype=float)
    fd = np.asarray(fun(d), dtype=float)
    for _ in range(maxiter):
        if np.all(_width_ok(a, b, tol)):
            break
        left = fc < fd
        # keep [a, d] where the left probe is lower, else [c, b]
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        keep = np.where(left, c, d)
        fkeep = np.where(left, fc, fd)
        fresh = np.where(left, b - INVPHI * (b - a), a + INVPHI * (b - a))
        ffresh = np.asarray(fun(fresh), dtype=float)
        c = np.where(left, fresh, keep)
        fc = np.where(left, ffresh, fkeep)
        d = np.where(left, keep, fresh)
        fd = np.where(left, fkeep, ffresh)
    else:
        if not np.all(_width_ok(a, b, tol)):
            raise ConvergenceError("golden-section search did not converge", a, b)
    xmin = np.where(fc < fd, c, d)
    return xmin, a, b


def bisect_sign(fun, lo, hi, tol=1e-10, maxiter=200):
    """Locate sign changes of ``fun`` in each bracket.

    Brackets where ``fun(lo)`` and ``fun(hi)`` share a strict sign are rejected
    with ``ValueError``; a zero endpoint is returned as is.
    """
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    fa = np.asarray(fun(a), dtype=float)
    fb = np.asarray(fun(b), dtype=float)
    if np.any(np.sign(fa) * np.sign(fb) > 0):
        raise ValueError("bracket without sign change")
    exact_a = fa == 0
    exact_b = fb == 0
    sa = np.sign(fa)
    for _ in range(maxiter):
        if np.all(_width_ok(a, b, tol) | exact_a | exact_b):
            break
        m = a + 0.5 * (b - a)
        fm = np.asarray(fun(m), dtype=float)
        go_right = np.sign(fm) == sa
        a = np.where(go_right, m, a)
        b = np.where(go_right, b, m)
        hit = fm == 0
        a = np.where(hit, m, a)
        b = np.where(hit, m, b)
    else:
        if not np.all(_width_ok(a, b, tol) | exact_a | exact_b):
            raise ConvergenceError("bisection did not converge", a, b)
    root = a + 0.5 * (b - a)
    root = np.where(exact_a, lo, np.where(exact_b, hi, root))
    return root


def bisect_predicate(pred, lo, hi, tol=1e-10, maxiter=200):
    """Boundary of a monotone boolean predicate.

    Assumes ``pred(lo)`` differs from ``pred(hi)``; returns the midpoint of the
    final bracket.
    """
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    pa = np.asarray(pred(a), dtype=bool)
    for _ in range(maxiter):
        if np.all(_width_ok(a, b, tol)):
            break
        m = a + 0.5 * (b - a)
        pm = np.asarray(pred(m), dtype=bool)
        same = pm == pa
        a = np.where(same, m, a)
        b = np.where(same, b, m)
    else:
        if not np.all(_width_ok(a, b, tol)):
            raise ConvergenceError("predicate bisection did not converge", a, b)
    return a + 0.5 * (b - a)


def bisect_monotone_root(fun, lo, hi, maxiter=80):
    """Polish roots of increasing functions to machine precision.

    Rows where ``fun(lo) <= 0 <= fun(hi)`` fails are flagged in the returned
    mask and left at the bracket midpoint.
    """
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    valid = (np.asarray(fun(a)) <= 0) & (np.asarray(fun(b)) >= 0)
    # floats crowd near zero; stop well below any useful absolute resolution
    floor = 1e-6 * EPS * (b - a)
    for _ in range(maxiter):
        m = a + 0.5 * (b - a)
        width = b - a
        if np.all((width <= 2 * EPS * np.maximum(np.abs(a), np.abs(b))) | (width <= floor)):
            break
        fm = np.asarray(fun(m))
        a = np.where(fm <= 0, m, a)
        b = np.where(fm <= 0, b, m)
    return a + 0.5 * (b - a), valid


_CENTRAL = {
    2: np.array([-1.0, 0.0, 1.0]) / 2.0,
    4: np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0,
    6: np.array([-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0]) / 60.0,
}


def central_difference(a, h, axis=0, order=2):
    """First derivative along ``axis`` on a uniform grid, interior nodes only.

    ``order`` picks the 2nd, 4th or 6th order central stencil, which drops
    ``order // 2`` nodes at each end of that axis.
    """
    if order not in _CENTRAL:
        raise ValueError("stencil order must be 2, 4 or 6")
    w = _CENTRAL[order]
    k = order // 2
    a = np.moveaxis(np.asarray(a, dtype=float), axis, 0)
    n = a.shape[0]
    if n < 2 * k + 1:
        raise ValueError(f"need at least {2 * k + 1} nodes for this stencil")
    out = sum(c * a[j:n - 2 * k + j] for j, c in enumerate(w) if c != 0.0)
    return np.moveaxis(out / h, 0, axis)
