"""P-curves: closed sequences of obstacle visits with winding angles.

A visit stores its obstacle and an integer k.  The winding angle is
``alpha = pr + 2*pi*k`` where ``pr`` in (-pi, pi] is the principal angle at
the visit, measured counter-clockwise from the ray towards the previous visit
to the ray towards the next one.  So pr = pi means straight through, pr = 0 a
reversal, and a left turn has pr < 0.  All decisions (nailed, unstable) use
only the exact sign data of pr and the integer k.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geom import Polyline, cross, dot, principal_angle, sub
from .obstacles import GridObstacleSet, ObstacleSet


def is_straight_at(prev, p, nxt) -> bool:
    """pr == pi: the two rays leave p in opposite directions."""
    a, b = sub(prev, p), sub(nxt, p)
    return cross(a, b) == 0 and dot(a, b) < 0


def principal_at(prev, p, nxt) -> float:
    if prev == p or nxt == p:
        return 0.0
    return principal_angle(sub(prev, p), sub(nxt, p))


@dataclass(frozen=True)
class PCurve:
    points: tuple
    k: tuple
    obstacles: ObstacleSet = field(compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((int(x), int(y)) for x, y in self.points))
        object.__setattr__(self, "k", tuple(int(v) for v in self.k))
        if len(self.points) != len(self.k):
            raise ValueError("points and windings differ in length")
        if len(self.points) < 1:
            raise ValueError("a P-curve needs at least one visit")

    def __len__(self):
        return len(self.points)

    @property
    def collapsed(self) -> bool:
        return len(self.points) == 1

    def neighbours(self, i):
        n = len(self.points)
        return self.points[(i - 1) % n], self.points[i], self.points[(i + 1) % n]

    def principal(self, i) -> float:
        if len(self.points) == 1:
            return 0.0
        return principal_at(*self.neighbours(i))

    def alpha(self, i) -> float:
        return self.principal(i) + 2 * math.pi * self.k[i]

    def alpha_values(self) -> list:
        return [self.alpha(i) for i in range(len(self.points))]

    def is_nailed(self, i) -> bool:
        if len(self.points) < 2:
            return False
        return is_straight_at(*self.neighbours(i))

    def is_unstable(self, i) -> bool:
        if len(self.points) < 2:
            return False
        return self.k[i] == 0 and not self.is_nailed(i)

    def length(self) -> float:
        """Length in real (unit-square) coordinates."""
        if len(self.points) < 2:
            return 0.0
        arr = np.array(self.points, dtype=float)
        d = np.roll(arr, -1, axis=0) - arr
        return float(np.hypot(d[:, 0], d[:, 1]).sum()) / self.obstacles.scale

    def real_points(self) -> np.ndarray:
        return np.array(self.points, dtype=float) / self.obstacles.scale

    def polyline(self) -> Polyline:
        return Polyline(self.points, closed=True)

    def visits(self):
        return list(zip(self.points, self.k))

    def rotated_to_canonical(self) -> tuple:
        """Visit tuple rotated to start at its lexicographically smallest rotation."""
        v = self.visits()
        n = len(v)
        best = min(range(n), key=lambda s: v[s:] + v[:s])
        return tuple(v[best:] + v[:best])

    def same_curve(self, other: "PCurve") -> bool:
        """Equal as circular visit sequences (points and windings)."""
        if len(self) != len(other):
            return False
        return self.rotated_to_canonical() == other.rotated_to_canonical()

    def transformed(self, fn, obstacles=None, orientation: int = 1) -> "PCurve":
        """Image under an affine map ``fn``; pass orientation=-1 for a map with negative determinant.

        A reflection negates every winding angle.  Principal parts flip sign
        except at straight visits, where -pi is re-expressed as pi - 2 pi.
        """
        if orientation > 0:
            ks = self.k
        else:
            ks = [-k - 1 if self.is_nailed(i) else -k for i, k in enumerate(self.k)]
        return PCurve([fn(p) for p in self.points], ks, obstacles or self.obstacles)

    # -- text format -------------------------------------------------

    def to_text(self) -> str:
        obs = self.obstacles
        if isinstance(obs, GridObstacleSet):
            head = f"# pcurve backend=grid density={obs.density}"
        else:
            head = f"# pcurve backend=explicit scale={obs.scale}"
        lines = [head] + [f"{x} {y} {k}" for (x, y), k in zip(self.points, self.k)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, obstacles: ObstacleSet | None = None) -> "PCurve":
        pts, ks = [], []
        meta = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for tok in line[1:].split():
                    if "=" in tok:
                        key, val = tok.split("=", 1)
                        meta[key] = val
                continue
            x, y, k = line.split()
            pts.append((int(x), int(y)))
            ks.append(int(k))
        if obstacles is None:
            if meta.get("backend") == "grid":
                obstacles = GridObstacleSet(int(meta.get("density", 1)))
            else:
                raise ValueError("explicit-backend curves need their obstacle set")
        return cls(pts, ks, obstacles)


def canonicalize(points, obstacles: ObstacleSet, k=None) -> PCurve:
    """Merge repeated consecutive points and add every obstacle inside an edge as a visit.

    Inserted visits and any visit without a given winding get k = 0.
    """
    pts = [tuple(p) for p in points]
    ks = list(k) if k is not None else [0] * len(pts)
    merged, mk = [], []
    for p, kk in zip(pts, ks):
        if merged and merged[-1] == p:
            continue
        merged.append(p)
        mk.append(kk)
    while len(merged) > 1 and merged[0] == merged[-1]:
        merged.pop()
        mk.pop()
    if not merged:
        raise ValueError("empty curve")
    if len(merged) == 1:
        return PCurve(merged, [0], obstacles)
    out, ok = [], []
    n = len(merged)
    for i in range(n):
        a, b = merged[i], merged[(i + 1) % n]
        out.append(a)
        ok.append(mk[i])
        for q in obstacles.points_on_segment(a, b):
            out.append(q)
            ok.append(0)
    return PCurve(out, ok, obstacles)


def snap_to_obstacles(curve, obstacles: ObstacleSet) -> PCurve:
    """Move every vertex to its nearest obstacle and canonicalize.

    Windings are principal (k = 0 everywhere).  A curve whose vertices all
    snap to one obstacle comes back as a one-visit collapsed curve.
    """
    verts = curve.vertices if isinstance(curve, Polyline) else curve
    if len(verts) < 3:
        raise ValueError("snapping needs a closed curve with at least 3 vertices")
    snapped = [obstacles.nearest(p) for p in verts]
    for p in snapped:
        if not obstacles.contains(p):
            raise AssertionError("nearest() returned a non-obstacle")
    return canonicalize(snapped, obstacles)


def polygon_curve(points, obstacles: ObstacleSet) -> PCurve:
    """Canonical principal P-curve through integer obstacle points."""
    return canonicalize([tuple(p) for p in points], obstacles)

