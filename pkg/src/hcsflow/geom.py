"""Exact planar predicates and polyline measures.

Coordinates handed to the predicates are Python ints (or Fractions); nothing
here rounds.  Floating values only appear in reported magnitudes (lengths,
curvature, h-distance).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels

Point = tuple  # (x, y) with exact coordinates


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


CW = Orientation.CW
COLLINEAR = Orientation.COLLINEAR
CCW = Orientation.CCW


def cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def orient2(a, b, c):
    """Twice the signed area of abc (exact)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orient(a, b, c) -> Orientation:
    d = orient2(a, b, c)
    if d > 0:
        return CCW
    if d < 0:
        return CW
    return COLLINEAR


def _sign(v):
    return (v > 0) - (v < 0)


def angle_sign(a, b):
    """Sign of the principal angle from vector a to vector b, in (-pi, pi].

    A half turn counts as positive.
    """
    c = cross(a, b)
    if c:
        return _sign(c)
    return 0 if dot(a, b) > 0 else 1


def principal_angle(a, b) -> float:
    """Principal signed angle from vector a to vector b, in (-pi, pi]."""
    c = cross(a, b)
    d = dot(a, b)
    if c == 0:
        return 0.0 if d > 0 else math.pi
    return math.atan2(float(c), float(d))


def _cmp_magnitude(a1, b1, a2, b2):
    # compare unsigned angles in [0, pi] through their cosines
    d1, d2 = dot(a1, b1), dot(a2, b2)
    n1 = dot(a1, a1) * dot(b1, b1)
    n2 = dot(a2, a2) * dot(b2, b2)
    # |t1| < |t2|  <=>  d1/sqrt(n1) > d2/sqrt(n2)
    s1, s2 = _sign(d1), _sign(d2)
    if s1 != s2:
        return -1 if s1 > s2 else 1
    if s1 == 0:
        return 0
    lhs, rhs = d1 * d1 * n2, d2 * d2 * n1
    if lhs == rhs:
        return 0
    if s1 > 0:
        return -1 if lhs > rhs else 1
    return 1 if lhs > rhs else -1


def compare_angles(a1, b1, a2, b2) -> int:
    """Exactly compare principal angle(a1 -> b1) with angle(a2 -> b2)."""
    s1, s2 = angle_sign(a1, b1), angle_sign(a2, b2)
    if s1 != s2:
        return -1 if s1 < s2 else 1
    if s1 == 0:
        return 0
    m = _cmp_magnitude(a1, b1, a2, b2)
    return m if s1 > 0 else -m


def on_segment(p, a, b) -> bool:
    """True iff p lies on the closed segment ab."""
    if orient2(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_intersect(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection test."""
    d1 = orient2(q1, q2, p1)
    d2 = orient2(q1, q2, p2)
    d3 = orient2(p1, p2, q1)
    d4 = orient2(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0 and on_segment(p1, q1, q2):
        return True
    if d2 == 0 and on_segment(p2, q1, q2):
        return True
    if d3 == 0 and on_segment(q1, p1, p2):
        return True
    if d4 == 0 and on_segment(q2, p1, p2):
        return True
    return False


@dataclass(frozen=True)
class Polyline:
    vertices: tuple
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        if self.closed and len(self.vertices) < 1:
            raise ValueError("closed polyline needs at least one vertex")

    def __len__(self):
        return len(self.vertices)

    def as_array(self, scale=1.0) -> np.ndarray:
        return np.array([[float(x), float(y)] for x, y in self.vertices], dtype=float) / scale


def _vertices_of(c):
    if isinstance(c, Polyline):
        return list(c.vertices), c.closed
    if hasattr(c, "points") and hasattr(c, "obstacles"):
        return list(c.points), True
    return [tuple(v) for v in c], True


def polyline_length(c, scale=1.0) -> float:
    """Sum of Euclidean edge lengths (closed curves include the closing edge)."""
    pts, closed = _vertices_of(c)
    if len(pts) < 2:
        return 0.0
    arr = np.array([[float(x), float(y)] for x, y in pts])
    if closed:
        arr = np.vstack([arr, arr[:1]])
    return float(np.sum(np.hypot(np.diff(arr[:, 0]), np.diff(arr[:, 1])))) / scale


def turning_curvature(points) -> float:
    """Sum of exterior angles of a closed polygon, pi - |angle p[i-1] p[i] p[i+1]|."""
    n = len(points)
    if n < 3:
        return 0.0
    total = 0.0
    for i in range(n):
        a, p, b = points[i - 1], points[i], points[(i + 1) % n]
        total += math.pi - abs(principal_angle(sub(a, p), sub(b, p)))
    return total


def total_abs_curvature(c) -> float:
    """Total absolute curvature of a P-curve from its winding angles.

    Each visit contributes ||alpha| - pi|, so a wound visit with alpha = 3*pi
    contributes 2*pi and a reversal (alpha = 0) contributes pi.  Plain point sequences use the geometric
    exterior angles.  Fewer than three visits give 0 with a RuntimeWarning.
    """
    if hasattr(c, "alpha_values"):
        if len(c) < 3:
            warnings.warn("curvature of a degenerate curve (< 3 visits) taken as 0", RuntimeWarning)
            return 0.0
        return sum(abs(abs(a) - math.pi) for a in c.alpha_values())
    pts, _ = _vertices_of(c)
    if len(pts) < 3:
        warnings.warn("curvature of a degenerate curve (< 3 visits) taken as 0", RuntimeWarning)
        return 0.0
    return turning_curvature(pts)


def minimalize(points):
    """Drop vertices whose neighbours are collinear with them (straight or reversing)."""
    pts = [tuple(p) for p in points]
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        out = []
        n = len(pts)
        for i in range(n):
            a, p, b = (out[-1] if out else pts[i - 1]), pts[i], pts[(i + 1) % n]
            if orient2(a, p, b) == 0:
                changed = True
                continue
            out.append(p)
        pts = out
    return pts


def _segment_pairs_clash(pts):
    n = len(pts)
    if n < 3:
        return False
    arr = np.array([[float(x), float(y)] for x, y in pts])
    nxt = np.roll(arr, -1, axis=0)
    lo = np.minimum(arr, nxt)
    hi = np.maximum(arr, nxt)
    for i in range(n):
        cand = np.nonzero(
            (lo[:, 0] <= hi[i, 0]) & (hi[:, 0] >= lo[i, 0]) & (lo[:, 1] <= hi[i, 1]) & (hi[:, 1] >= lo[i, 1])
        )[0]
        a, b = pts[i], pts[(i + 1) % n]
        for j in cand:
            if j <= i:
                continue
            c, d = pts[j], pts[(j + 1) % n]
            if j == i + 1 or (i == 0 and j == n - 1):
                # adjacent edges share exactly one endpoint; anything more is overlap
                shared = b if j == i + 1 else a
                other_e = a if j == i + 1 else b
                other_f = d if j == i + 1 else c
                if orient2(other_e, shared, other_f) == 0 and dot(sub(other_e, shared), sub(other_f, shared)) > 0:
                    return True
                continue
            if segments_intersect(a, b, c, d):
                return True
    return False


def is_simple(c) -> bool:
    """No repeated visit and no edge contact beyond shared consecutive endpoints."""
    pts, _ = _vertices_of(c)
    if len(pts) < 3:
        return False
    if len(set(pts)) != len(pts):
        return False
    return not _segment_pairs_clash(pts)


def curves_disjoint(a, b) -> bool:
    """Two closed curves share no point (exact segment tests)."""
    pa, _ = _vertices_of(a)
    pb, _ = _vertices_of(b)
    if set(pa) & set(pb):
        return False
    na, nb = len(pa), len(pb)
    for i in range(na):
        p, q = pa[i], pa[(i + 1) % na]
        for j in range(nb):
            if segments_intersect(p, q, pb[j], pb[(j + 1) % nb]):
                return False
    return True


def inflection_edge_count(c) -> int:
    """Number of edges whose endpoints turn in opposite orientations.

    The input must be a closed simple polygon; collinear vertices are removed
    first.  Raises ValueError for non-simple curves.
    """
    pts, _ = _vertices_of(c)
    if not is_simple(pts):
        raise ValueError("inflection edges are only defined here for simple curves")
    pts = minimalize(pts)
    n = len(pts)
    turns = [_sign(orient2(pts[i - 1], pts[i], pts[(i + 1) % n])) for i in range(n)]
    return sum(1 for i in range(n) if turns[i] != turns[(i + 1) % n])


def _as_float_array(c, scale=1.0):
    if isinstance(c, np.ndarray):
        return np.asarray(c, dtype=float)
    pts, _ = _vertices_of(c)
    return np.array([[float(x), float(y)] for x, y in pts], dtype=float) / scale


def h_distance(a, b, closed=True) -> float:
    """Symmetric max over vertices of each curve of the distance to the other curve."""
    A = _as_float_array(a)
    B = _as_float_array(b)
    if len(A) == 0 or len(B) == 0:
        raise ValueError("h_distance needs non-empty curves")
    return float(max(_kernels.max_vertex_to_polyline(A, B, closed), _kernels.max_vertex_to_polyline(B, A, closed)))


def _point_segment_sq(p, a, b):
    ab = sub(b, a)
    ap = sub(p, a)
    den = dot(ab, ab)
    if den == 0:
        return Fraction(dot(ap, ap))
    t = Fraction(dot(ap, ab), den)
    t = min(max(t, Fraction(0)), Fraction(1))
    dx = a[0] + t * ab[0] - p[0]
    dy = a[1] + t * ab[1] - p[1]
    return dx * dx + dy * dy


def h_distance_sq_exact(a, b, closed=True) -> Fraction:
    """Exact squared h-distance for rational vertices."""
    pa, _ = _vertices_of(a)
    pb, _ = _vertices_of(b)

    def one_way(P, Q):
        segs = [(Q[i], Q[(i + 1) % len(Q)]) for i in range(len(Q) if closed else len(Q) - 1)] or [(Q[0], Q[0])]
        return max(min(_point_segment_sq(p, s, t) for s, t in segs) for p in P)

    return max(one_way(pa, pb), one_way(pb, pa))
