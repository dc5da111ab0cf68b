"""Convex and trimmed focal scenes with a non-functional equidistant set.

With K the disc of radius 2 about Q1 = (0, y0) and L the epigraph of the
piecewise scene function, every point of a vertical segment over x0 is
equidistant. Cutting disk segments off L along a fat Cantor schedule keeps
exactly the points (x0, t) with t + 1/2 in the fat Cantor set.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .functions import PiecewiseSVC, verify_convexity
from .geometry import Ball, Epigraph, TrimmedEpigraph

RESIDUAL_TOL = 1e-9
SCHEDULE = "step n removes the open middle interval of length 4^-n from each of the 2^(n-1) kept intervals; breadth-first order"


@dataclass(frozen=True)
class FatCantorSet:
    depth: int
    removed: tuple   # open intervals (a, b) as Fractions, breadth-first
    kept: tuple      # closed intervals, sorted

    @property
    def measure(self) -> Fraction:
        return sum((b - a for a, b in self.kept), Fraction(0))

    def contains(self, u):
        """Membership of u in [0, 1] minus the removed open intervals."""
        u = np.asarray(u, dtype=float)
        inside = (u >= 0) & (u <= 1)
        for a, b in self.removed:
            inside &= ~((u > float(a)) & (u < float(b)))
        return inside


def fat_cantor(depth: int) -> FatCantorSet:
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    kept = [(Fraction(0), Fraction(1))]
    removed = []
    for n in range(1, depth + 1):
        half = Fraction(1, 2 * 4 ** n)
        nxt = []
        for a, b in kept:
            mid = (a + b) / 2
            removed.append((mid - half, mid + half))
            nxt += [(a, mid - half), (mid + half, b)]
        kept = nxt
    return FatCantorSet(depth, tuple(removed), tuple(kept))


def measure_limit() -> Fraction:
    """1 - sum_n 2^(n-1) 4^(-n), summed in closed form."""
    return 1 - Fraction(1, 4) / (1 - Fraction(1, 2))


@dataclass
class SvcScene:
    x0: float
    y0: float
    R: float
    Q1: np.ndarray
    Q2: np.ndarray
    P1p: np.ndarray
    P2p: np.ndarray
    f: PiecewiseSVC
    depth: int
    cantor: FatCantorSet
    K: Ball
    L: Epigraph
    L_trimmed: TrimmedEpigraph
    schedule: str = SCHEDULE

    @property
    def removed_intervals(self):
        return self.cantor.removed

    def line_distance_Q1(self):
        """Distance from Q1 to the line carrying the left ray."""
        s3 = math.sqrt(3.0)
        return abs(s3 * self.Q1[0] + self.Q1[1] - 2 * s3 * self.x0 - self.y0 + 4) / 2.0

    def arc_point(self, t):
        """Point where the segment from (x0, t) to Q2 crosses the arc."""
        t = np.asarray(t, dtype=float)
        phi = math.pi + np.arctan((self.y0 - t) / self.x0)
        return self.Q2 + self.R * np.stack([np.cos(phi), np.sin(phi)], axis=-1)


def build_scene(depth: int = 0) -> SvcScene:
    f = PiecewiseSVC()
    x0, y0, R = f.x0, f.y0, f.R
    q1 = np.array([0.0, y0])
    q2 = f.center.copy()
    p1 = np.array([2 * x0 - math.sqrt(2.0), y0 - math.sqrt(2.0)])
    p2 = np.array([f.left_break, float(f.value(f.left_break))])
    cantor = fat_cantor(depth)
    scene = SvcScene(x0, y0, R, q1, q2, p1, p2, f, depth, cantor,
                     Ball(R, center=q1), Epigraph(f), None)
    chords = [(scene.arc_point(float(a) - 0.5), scene.arc_point(float(b) - 0.5))
              for a, b in cantor.removed]
    scene.L_trimmed = TrimmedEpigraph(f, chords)
    return scene


@dataclass
class Membership:
    t: np.ndarray
    is_equidistant: np.ndarray
    residual: np.ndarray
    in_fat_cantor: np.ndarray
    agrees: np.ndarray


def segment_membership_test(scene: SvcScene, t, use_trimmed: bool = True,
                            tol: float = RESIDUAL_TOL) -> Membership:
    """Distance-based verdict on (x0, t), next to the interval-membership predicate."""
    t = np.asarray(t, dtype=float)
    pts = np.stack([np.full(t.shape, scene.x0), t], axis=-1)
    L = scene.L_trimmed if use_trimmed else scene.L
    residual = scene.K.distance(pts) - L.distance(pts)
    verdict = np.abs(residual) <= tol
    expected = scene.cantor.contains(t + 0.5) if use_trimmed else (np.abs(t) <= 0.5)
    return Membership(t, verdict, residual, expected, verdict == expected)


def measure_estimate(scene: SvcScene) -> float:
    return float(scene.cantor.measure)


class _Boundary:
    dim = 1

    def __init__(self, L):
        self.value = L.height


def trimmed_convexity(scene: SvcScene, step: float = 1e-3):
    """Second differences of the lower boundary of L' over the arc's x-range."""
    lo, hi = scene.f.left_break - 0.5, scene.f.right_break + 0.5
    return verify_convexity(_Boundary(scene.L_trimmed), (lo, hi), step)
