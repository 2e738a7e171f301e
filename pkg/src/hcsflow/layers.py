"""Convex-layer decomposition (onion peeling) and hull-boundary curves."""
from __future__ import annotations

import numpy as np

from . import _kernels
from .obstacles import ExplicitObstacleSet, GridObstacleSet, ObstacleSet
from .pcurve import PCurve, canonicalize


def _points_of(obs, box=None):
    if isinstance(obs, ExplicitObstacleSet):
        return list(obs.points)
    if isinstance(obs, GridObstacleSet):
        if box is None:
            raise ValueError("a grid obstacle set needs a box (x0, y0, x1, y1)")
        x0, y0, x1, y1 = box
        return [(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)]
    return [tuple(p) for p in obs]


def hull_vertices(points) -> list:
    """Strict convex hull vertices, counter-clockwise."""
    if not points:
        return []
    xs = np.array([p[0] for p in points], dtype=np.int64)
    ys = np.array([p[1] for p in points], dtype=np.int64)
    return [points[i] for i in _kernels.convex_hull_indices(xs, ys)]


def convex_layers(obs, box=None) -> list:
    """Repeatedly strip the strict hull vertices; returns a list of point sets."""
    remaining = sorted(set(_points_of(obs, box)))
    layers = []
    while remaining:
        hv = hull_vertices(remaining)
        layers.append(set(hv))
        drop = set(hv)
        remaining = [p for p in remaining if p not in drop]
    return layers


def hull_curve(obs: ObstacleSet, box=None) -> PCurve:
    """Canonical P-curve along the convex hull boundary (counter-clockwise)."""
    hv = hull_vertices(sorted(set(_points_of(obs, box))))
    # releases stay inside the hull, so the unbounded grid is fine here
    return canonicalize(hv, obs)


def boxed_grid_as_explicit(box) -> ExplicitObstacleSet:
    """All lattice points of a box as an explicit set (so releases cannot leave the box)."""
    x0, y0, x1, y1 = box
    return ExplicitObstacleSet([(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)])


def layer_vertex_sets(curves) -> list:
    """Non-nailed visit sets of each curve in an HCS trace."""
    out = []
    for c in curves:
        if c.collapsed:
            out.append({c.points[0]})
        else:
            out.append({c.points[i] for i in range(len(c)) if not c.is_nailed(i)})
    return out
