"""Front-tracking simulation of affine curve-shortening flow (ACSF).

Each sample moves towards the centre of the circle through it and its two
neighbours with speed r**(-1/3).  After every step it also slides along the
curve, away from its nearer neighbour, by a fixed fraction of the spacing
imbalance.  That slide only reparametrises the front but stops samples from
piling up at sharp corners, which would otherwise force tiny time steps.  Binary64 throughout; this is
a reference oracle, not part of the exact core.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .geom import Polyline

DEFAULT_C = 3e-4
DEFAULT_T_MIN = 3e-9
DEFAULT_RELAX = 0.25
SMALL_SPACING = 1e-6

STATUS = {
    _kernels.ACSF_REACHED_LENGTH: "length",
    _kernels.ACSF_REACHED_TIME: "time",
    _kernels.ACSF_BLOWUP: "blowup",
    _kernels.ACSF_MAX_STEPS: "max_steps",
}


class AcsfBlowup(RuntimeError):
    pass


@dataclass
class AcsfState:
    points: np.ndarray
    t: float = 0.0
    c: float = DEFAULT_C
    t_min: float = DEFAULT_T_MIN
    steps: int = 0
    initial_length: float = 0.0
    flags: list = field(default_factory=list)
    relax: float = DEFAULT_RELAX

    @property
    def m(self) -> int:
        return len(self.points)

    def length(self) -> float:
        d = np.roll(self.points, -1, axis=0) - self.points
        return float(np.hypot(d[:, 0], d[:, 1]).sum())

    def min_spacing(self) -> float:
        d = np.roll(self.points, -1, axis=0) - self.points
        return float(np.hypot(d[:, 0], d[:, 1]).min())

    def copy(self) -> "AcsfState":
        return AcsfState(self.points.copy(), self.t, self.c, self.t_min, self.steps, self.initial_length,
                         list(self.flags), self.relax)


def _as_array(curve) -> np.ndarray:
    if isinstance(curve, Polyline):
        verts = curve.vertices
    else:
        verts = curve
    return np.array([[float(x), float(y)] for x, y in verts], dtype=float)


def resample(points, m: int) -> np.ndarray:
    """m samples spaced uniformly by arc length along a closed polyline, starting at its first vertex."""
    P = np.asarray(points, dtype=float)
    Q = np.vstack([P, P[:1]])
    seg = np.hypot(np.diff(Q[:, 0]), np.diff(Q[:, 1]))
    L = seg.sum()
    if not L > 0:
        raise ValueError("curve has zero length")
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    s = np.arange(m) * (L / m)
    j = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(seg) - 1)
    frac = np.where(seg[j] > 0, (s - cum[j]) / np.where(seg[j] > 0, seg[j], 1.0), 0.0)
    return Q[j] + frac[:, None] * (Q[j + 1] - Q[j])


def init(curve, m: int = 1000, c: float = DEFAULT_C, t_min: float = DEFAULT_T_MIN,
         relax: float = DEFAULT_RELAX) -> AcsfState:
    if m < 3:
        raise ValueError("need at least 3 samples")
    if not 0 <= relax <= 0.5:
        raise ValueError("relax must lie in [0, 0.5]")
    pts = resample(_as_array(curve), m)
    st = AcsfState(pts, 0.0, c, t_min, relax=relax)
    st.initial_length = st.length()
    return st


def curvature_circle(p_prev, p, p_next):
    """Unit normal towards the circumcentre and the radius (inf and a zero normal when collinear)."""
    a = np.asarray(p_prev, float) - np.asarray(p, float)
    b = np.asarray(p_next, float) - np.asarray(p, float)
    if not (np.any(a) and np.any(b)) or np.array_equal(a, b):
        raise ValueError("coincident points")
    a2, b2 = a @ a, b @ b
    d = 2.0 * (a[0] * b[1] - a[1] * b[0])
    if d == 0.0:
        return np.zeros(2), math.inf
    o = np.array([(b[1] * a2 - a[1] * b2) / d, (a[0] * b2 - b[0] * a2) / d])
    r = float(np.hypot(*o))
    return o / r, r


def time_step(state: AcsfState) -> float:
    """max(c * d_min**(4/3), t_min); the lower clamp lets the front pass singular moments."""
    return max(state.c * state.min_spacing() ** (4.0 / 3.0), state.t_min)


def step(state: AcsfState) -> AcsfState:
    """One explicit step, all samples moved simultaneously (numpy path)."""
    new = state.copy()
    dt = time_step(state)
    x, y = state.points[:, 0], state.points[:, 1]
    vx, vy = _kernels.acsf_velocity(x, y)
    sx, sy = _kernels.relax_shift(x, y, state.relax)
    new.points[:, 0] += dt * vx + sx
    new.points[:, 1] += dt * vy + sy
    if not np.all(np.isfinite(new.points)):
        raise AcsfBlowup(f"non-finite sample positions at t={state.t:.6g}")
    new.t = state.t + dt
    new.steps = state.steps + 1
    if new.min_spacing() < SMALL_SPACING:
        new.flags.append(("small_spacing", new.t))
    return new


def advance(state: AcsfState, t_end: float = math.inf, target_length: float = 0.0, max_steps: int = 50_000_000):
    """Integrate in place until t_end, the target length, or max_steps; returns a status string."""
    x = np.ascontiguousarray(state.points[:, 0])
    y = np.ascontiguousarray(state.points[:, 1])
    t, n, status = _kernels.acsf_advance(x, y, state.t, state.c, state.t_min, target_length, t_end, max_steps,
                                          state.relax)
    state.points = np.stack([x, y], axis=1)
    state.t = t
    state.steps += n
    if status == _kernels.ACSF_BLOWUP:
        raise AcsfBlowup(f"non-finite sample positions near t={t:.6g}")
    if state.min_spacing() < SMALL_SPACING:
        state.flags.append(("small_spacing", t))
    return STATUS[status]


@dataclass
class FlowResult:
    points: np.ndarray
    t_star: float
    reached: bool
    steps: int
    status: str


def run_to_length_fraction(state: AcsfState, f: float, t_max: float = 10.0) -> FlowResult:
    """Flow until length <= f * initial length; ``reached`` is False if the run stopped first."""
    if not 0 < f < 1:
        raise ValueError("fraction must lie in (0, 1)")
    st = state.copy()
    L0 = st.initial_length or st.length()
    status = advance(st, t_end=t_max, target_length=f * L0)
    return FlowResult(st.points, st.t, status == "length", st.steps, status)


def mean_radius(points) -> float:
    P = np.asarray(points, float)
    c = P.mean(axis=0)
    return float(np.hypot(*(P - c).T).mean())


def circle_points(radius=1.0, n=256, center=(0.0, 0.0)) -> np.ndarray:
    th = 2 * np.pi * np.arange(n) / n
    return np.stack([center[0] + radius * np.cos(th), center[1] + radius * np.sin(th)], axis=1)


def write_csv(path, snapshots):
    """snapshots: iterable of (t, points) pairs; writes t,x,y rows."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "x", "y"])
        for t, pts in snapshots:
            for x, y in np.asarray(pts):
                w.writerow([repr(float(t)), repr(float(x)), repr(float(y))])
