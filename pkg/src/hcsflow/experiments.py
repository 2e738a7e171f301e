"""Desk-scale HCS versus ACSF experiments.

A start curve is snapped to an obstacle set, HCS runs until the curve has
shrunk to a fraction of its length, and the iteration count m is turned into
the constant c = m / (t* N^(2/3)), where t* is the ACSF time at which the
smooth flow reaches the same length fraction.
"""
from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import acsf
from .engine import run as hcs_run
from .geom import h_distance
from .obstacles import GridObstacleSet, generate_random
from .pcurve import snap_to_obstacles

DELTA = tuple((Fraction(x), Fraction(y)) for x, y in [
    ("0", "0"), ("0.16", "0.81"), ("0.4", "0.45"), ("0.64", "1"),
    ("0.94", "0.3"), ("1", "0.45"), ("0.56", "0.07"), ("0.52", "0.13"),
])

BACKENDS = ("grid", "random")
CSV_COLUMNS = ["backend", "N", "seed", "m", "t_star", "c", "h", "wall_ms"]


def load_curve(source: str) -> tuple:
    """``builtin:delta`` or a text file of "x y" lines (decimals kept exact)."""
    if source == "builtin:delta":
        return DELTA
    pts = []
    with open(source) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            x, y = line.replace(",", " ").split()[:2]
            pts.append((Fraction(x), Fraction(y)))
    if len(pts) < 3:
        raise ValueError(f"{source}: a closed curve needs at least 3 vertices")
    return tuple(pts)


def ideal_length(curve) -> float:
    P = np.array([[float(x), float(y)] for x, y in curve])
    d = np.roll(P, -1, axis=0) - P
    return float(np.hypot(d[:, 0], d[:, 1]).sum())


def estimate_constant(m, t_star, N) -> float:
    if t_star <= 0:
        raise ValueError("t_star must be positive")
    if N < 1:
        raise ValueError("N must be at least 1")
    return m / (t_star * N ** (2.0 / 3.0))


@lru_cache(maxsize=8)
def acsf_target(curve: tuple, fraction: float, m: int = 1000):
    """ACSF run of ``curve`` to the length fraction; cached per process."""
    res = acsf.run_to_length_fraction(acsf.init(curve, m), fraction)
    if not res.reached:
        raise RuntimeError(f"ACSF stopped ({res.status}) before reaching {fraction} of the length")
    return res


@dataclass
class ExperimentReport:
    backend: str
    N: int
    seed: object
    m: float
    t_star: float
    c: float
    h: float
    wall_ms: float = 0.0
    snapped_length: float = 0.0
    final_length: float = 0.0
    skipped: str = ""
    final_points: np.ndarray | None = field(default=None, repr=False, compare=False)

    def row(self, omit_wall_time=False) -> list:
        wall = "" if omit_wall_time else f"{self.wall_ms:.1f}"
        seed = "mean" if self.seed is None else self.seed
        return [self.backend, self.N, seed, _fmt(self.m), _fmt(self.t_star), _fmt(self.c), _fmt(self.h), wall]


def _fmt(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return ""
    return repr(float(v))


def make_obstacles(backend: str, N: int, seed=0):
    if backend == "grid":
        return GridObstacleSet(N)
    if backend == "random":
        return generate_random((0, 0, 1, 1), N, seed)
    raise ValueError(f"unknown backend {backend!r}")


@dataclass
class ExperimentConfig:
    curve: str = "builtin:delta"
    backends: tuple = ("grid",)
    ns: tuple = (10_000,)
    seeds: tuple = (0, 1, 2, 3, 4)
    stop_fraction: float = 0.7
    length_reference: str = "snapped"
    acsf_samples: int = 1000
    max_steps: int | None = None
    workers: int = 1
    keep_points: bool = False


def run_cell(curve, backend, N, seed, fraction, t_star, target_points, length_reference="snapped",
             max_steps=None, keep_points=False) -> ExperimentReport:
    """Snap, run HCS to the length fraction, and compare against the ACSF curve."""
    t0 = time.perf_counter()
    obs = make_obstacles(backend, N, seed)
    start = snap_to_obstacles(list(curve), obs)
    L0 = start.length()
    if start.collapsed or len(start) < 3 or L0 == 0:
        return ExperimentReport(backend, N, seed, float("nan"), t_star, float("nan"), float("nan"),
                                skipped="curve does not snap to a proper polygon at this N")
    f = fraction
    if length_reference == "ideal":
        # stop against the unsnapped length instead
        f = fraction * ideal_length(curve) / L0
    elif length_reference != "snapped":
        raise ValueError(f"unknown length reference {length_reference!r}")
    trace = hcs_run(start, stop="length_fraction", fraction=min(f, 1.0), max_steps=max_steps, keep_curves=False)
    final = trace.curves[-1]
    pts = final.real_points()
    h = h_distance(pts, target_points) if len(pts) > 1 else float("nan")
    m = trace.steps_executed
    wall = (time.perf_counter() - t0) * 1000.0
    rep = ExperimentReport(backend, N, seed, m, t_star, estimate_constant(m, t_star, N), h, wall, L0, final.length())
    if trace.stop_reason != "length_fraction":
        rep.skipped = f"stopped by {trace.stop_reason}"
    if keep_points:
        rep.final_points = pts
    return rep


def _cell_job(args):
    return run_cell(*args)


def mean_report(reps) -> ExperimentReport:
    ok = [r for r in reps if not r.skipped]
    if not ok:
        raise ValueError("no completed runs to average")
    m = float(np.mean([r.m for r in ok]))
    t_star = ok[0].t_star
    return ExperimentReport(ok[0].backend, ok[0].N, None, m, t_star, estimate_constant(m, t_star, ok[0].N),
                            float(np.mean([r.h for r in ok])), float(sum(r.wall_ms for r in ok)))


def run_conjecture_experiment(config: ExperimentConfig) -> list:
    """One report per (backend, N, seed), plus a mean row per random (backend, N)."""
    curve = load_curve(config.curve)
    target = acsf_target(curve, config.stop_fraction, config.acsf_samples)
    jobs = []
    for backend in config.backends:
        if backend not in BACKENDS:
            raise ValueError(f"unknown backend {backend!r}")
        seeds = config.seeds if backend == "random" else (0,)
        for N in config.ns:
            for s in seeds:
                jobs.append((curve, backend, int(N), s, config.stop_fraction, target.t_star, target.points,
                             config.length_reference, config.max_steps, config.keep_points))
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            results = list(pool.map(_cell_job, jobs))
    else:
        results = [_cell_job(j) for j in jobs]
    out = []
    i = 0
    for backend in config.backends:
        seeds = config.seeds if backend == "random" else (0,)
        for _N in config.ns:
            cell = results[i:i + len(seeds)]
            i += len(seeds)
            out.extend(cell)
            if backend == "random":
                out.append(mean_report(cell))
    return out


def reports_to_csv(reports, omit_wall_time=False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(r.row(omit_wall_time))
    return buf.getvalue()


def write_csv(path, reports, omit_wall_time=False):
    with open(path, "w", newline="") as fh:
        fh.write(reports_to_csv(reports, omit_wall_time))


@dataclass
class ConvergenceResult:
    ns: list
    reference_n: int
    distances: list
    ratios: list

    @property
    def monotone(self) -> bool:
        return all(b < a for a, b in zip(self.distances, self.distances[1:]))


def convergence_sweep(ns=(10_000, 100_000), reference_n=1_000_000, curve="builtin:delta", fraction=0.7,
                      length_reference="snapped") -> ConvergenceResult:
    """h-distance of the grid HCS result at each N to the one at ``reference_n``."""
    cfg = ExperimentConfig(curve=curve, backends=("grid",), ns=tuple(ns) + (reference_n,), stop_fraction=fraction,
                           length_reference=length_reference, keep_points=True)
    reps = run_conjecture_experiment(cfg)
    ref = reps[-1].final_points
    dists = [h_distance(r.final_points, ref) for r in reps[:-1]]
    ratios = [b / a for a, b in zip(dists, dists[1:])]
    return ConvergenceResult(list(ns), reference_n, dists, ratios)
