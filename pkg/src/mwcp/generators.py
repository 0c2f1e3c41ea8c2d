"""Deterministic instance families for testing and benchmarking."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .geometry import (
    convex_hull_2d,
    point_in_convex_polygon,
    segments_intersect,
)
from .model import Instance, WeightedPoint

# Rational circle points come from the tan-half-angle map; the parameter is
# snapped to this denominator and capped so coordinates stay small.
_SNAP_DEN = 1024
_T_CAP = 128.0
_MAX_HALVINGS = 64


def gen_uniform(n: int, dimension: int, seed: int, weight_range=(-9, 9)) -> Instance:
    """Seeded uniform instance: distinct grid points, nonzero integer weights.

    The grid side grows with n^2, which makes collinear triples and shared
    coordinates rare without ruling them out; identical arguments always
    reproduce the identical instance.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if dimension < 1:
        raise ValueError("dimension must be >= 1")
    lo, hi = int(weight_range[0]), int(weight_range[1])
    if lo > hi or (lo == 0 and hi == 0):
        raise ValueError(f"degenerate weight range [{lo}, {hi}]")
    rng = random.Random(seed)
    grid = max(4 * n * n, 16)
    seen = set()
    rows = []
    while len(rows) < n:
        coords = tuple(rng.randint(0, grid) for _ in range(dimension))
        if coords in seen:
            continue
        seen.add(coords)
        w = 0
        while w == 0:
            w = rng.randint(lo, hi)
        rows.append(WeightedPoint(tuple(Fraction(c) for c in coords), Fraction(w)))
    meta = {
        "family": "uniform",
        "n": n,
        "dimension": dimension,
        "seed": seed,
        "weight_range": [lo, hi],
        "grid": grid,
    }
    return Instance(dimension, tuple(rows), meta)


def _circle_point(t: Fraction):
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def gen_ngon_family(n: int) -> Instance:
    """Adversarial family: n +1 points in convex position ringed by n -1 points.

    The positive points sit exactly on the unit circle (rational via the
    tan-half-angle parameterization), angularly near-uniform.  Each edge
    midpoint is pushed outward along its perpendicular bisector by a factor
    1 + delta to place a -1 point; delta is halved until two facts verify
    exactly: every negative point is strictly outside the positive hull, and
    each segment between consecutive negative points intersects that hull.
    The full polygon is then optimal with weight n.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    ts = []
    for i in range(n):
        phi = math.pi * (2 * i + 1) / n
        t = math.tan(phi / 2.0)
        t = max(min(t, _T_CAP), -_T_CAP)
        ts.append(Fraction(round(t * _SNAP_DEN), _SNAP_DEN))
    if len(set(ts)) != n:
        raise RuntimeError(f"circle parameters collide for n={n}")
    vertices = [_circle_point(t) for t in ts]
    hull = convex_hull_2d(vertices)
    if len(hull) != n:
        raise RuntimeError(f"positive points not in convex position for n={n}")

    mids = []
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        if mid == (0, 0):
            raise RuntimeError("edge midpoint at the circle center")
        mids.append(mid)

    delta = Fraction(1, 2)
    for _ in range(_MAX_HALVINGS):
        scale = 1 + delta
        negs = [(m[0] * scale, m[1] * scale) for m in mids]
        if _ngon_valid(hull, negs):
            break
        delta /= 2
    else:
        raise RuntimeError(f"no valid offset found for n={n}")

    rows = [WeightedPoint(p, Fraction(1)) for p in vertices]
    rows += [WeightedPoint(p, Fraction(-1)) for p in negs]
    pts = [wp.point for wp in rows]
    if len(set(pts)) != len(pts):
        raise RuntimeError("generated points collide")
    meta = {"family": "ngon", "n": n, "delta": str(delta)}
    return Instance(2, tuple(rows), meta)


def _ngon_valid(hull, negs) -> bool:
    n = len(negs)
    for p in negs:
        if point_in_convex_polygon(p, hull):
            return False
    edges = [(hull[i - 1], hull[i]) for i in range(len(hull))]
    for i in range(n):
        a = negs[i]
        b = negs[(i + 1) % n]
        if not any(segments_intersect(a, b, e1, e2) for e1, e2 in edges):
            return False
    return True
