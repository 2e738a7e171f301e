"""Command-line entry point: ``hcsflow <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import acsf, experiments
from .engine import run as hcs_run
from .geom import Polyline
from .layers import boxed_grid_as_explicit, convex_layers, hull_curve, layer_vertex_sets
from .obstacles import ExplicitObstacleSet
from .pcurve import PCurve, snap_to_obstacles
from .render import render_svg


def _int_list(vals):
    out = []
    for v in vals:
        for part in str(v).split(","):
            part = part.strip()
            if not part:
                continue
            if "-" in part[1:]:
                a, b = part.split("-", 1) if not part.startswith("-") else (part, part)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(float(part)))
    return out


def _add_curve_args(p, stop_default):
    p.add_argument("--curve", default="builtin:delta", help="builtin:delta or a file of 'x y' lines")
    p.add_argument("--stop-fraction", type=float, default=stop_default)


def cmd_hcs_run(args):
    curve = experiments.load_curve(args.curve)
    obs = experiments.make_obstacles(args.backend, args.n, args.seed)
    start = snap_to_obstacles(list(curve), obs)
    stop = "length_fraction" if args.stop_fraction else ("max_steps" if args.max_steps else "collapse")
    trace = hcs_run(start, stop=stop, fraction=args.stop_fraction, max_steps=args.max_steps)
    print(f"visits={len(start)} length={trace.lengths[0]:.6f}")
    print(f"steps={trace.steps_executed} stop={trace.stop_reason} final_length={trace.lengths[-1]:.6f}")
    if args.out_svg:
        every = max(1, args.every)
        picked = list(range(0, len(trace.curves), every))
        if picked[-1] != len(trace.curves) - 1:
            picked.append(len(trace.curves) - 1)
        render_svg([trace.curves[i] for i in picked], args.out_svg, labels=[f"step {i}" for i in picked])
    if args.out_curve:
        with open(args.out_curve, "w") as fh:
            fh.write(trace.curves[-1].to_text())
    return 0


def cmd_acsf_run(args):
    curve = experiments.load_curve(args.curve)
    st = acsf.init(curve, args.m)
    L0 = st.initial_length
    snaps = [(0.0, st.points.copy())]
    if args.stop_fraction:
        res = acsf.run_to_length_fraction(st, args.stop_fraction, t_max=args.t_end)
        st.points, st.t, status = res.points, res.t_star, res.status
    else:
        ts = np.linspace(0.0, args.t_end, max(args.snapshots, 1) + 1)[1:]
        status = "time"
        for t in ts:
            status = acsf.advance(st, t_end=t)
            snaps.append((st.t, st.points.copy()))
            if status != "time":
                break
    if snaps[-1][0] != st.t:
        snaps.append((st.t, st.points.copy()))
    print(f"t={st.t!r} status={status} length_fraction={st.length() / L0:.6f}")
    if args.out_csv:
        acsf.write_csv(args.out_csv, snaps)
    if args.out_svg:
        render_svg([p for _, p in snaps], args.out_svg, labels=[f"t={t:.5f}" for t, _ in snaps])
    return 0


def cmd_layers(args):
    if args.points:
        obs = ExplicitObstacleSet.load(args.points)
    else:
        w, h = (int(v) for v in args.grid.lower().split("x"))
        obs = boxed_grid_as_explicit((0, 0, w - 1, h - 1))
    layers = convex_layers(obs)
    for i, L in enumerate(layers):
        print(f"layer {i}: {len(L)} points")
    if args.check:
        trace = hcs_run(hull_curve(obs), stop="collapse", max_steps=len(obs.points) + 1)
        got = layer_vertex_sets(trace.curves)
        ok = got[:len(layers)] == layers
        print("hcs matches convex layers" if ok else "MISMATCH between hcs and convex layers")
        if not ok:
            return 1
    if args.out_svg:
        curves = []
        for L in layers:
            pts = sorted(L)
            c = np.mean(pts, axis=0)
            pts.sort(key=lambda p: np.arctan2(p[1] - c[1], p[0] - c[0]))
            curves.append(np.array(pts, float) / obs.scale)
        render_svg(curves, args.out_svg, labels=[f"layer {i}" for i in range(len(curves))])
    return 0


def cmd_experiment(args):
    if args.convergence:
        res = experiments.convergence_sweep(tuple(args.n), args.reference_n, args.curve, args.stop_fraction,
                                            args.length_reference)
        for N, d in zip(res.ns, res.distances):
            print(f"N={N} h_to_{res.reference_n}={d!r}")
        for r in res.ratios:
            print(f"ratio={r:.4f}")
        return 0
    cfg = experiments.ExperimentConfig(curve=args.curve, backends=tuple(args.backend), ns=tuple(args.n),
                                       seeds=tuple(args.seeds), stop_fraction=args.stop_fraction,
                                       length_reference=args.length_reference, acsf_samples=args.m,
                                       max_steps=args.max_steps, workers=args.workers)
    reps = experiments.run_conjecture_experiment(cfg)
    text = experiments.reports_to_csv(reps, args.omit_wall_time)
    if args.out_csv:
        with open(args.out_csv, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for r in reps:
        if r.skipped:
            print(f"warning: {r.backend} N={r.N} seed={r.seed}: {r.skipped}", file=sys.stderr)
    return 0


def _read_any_curve(path):
    with open(path) as fh:
        text = fh.read()
    if text.startswith("# pcurve"):
        return PCurve.from_text(text)
    if text.startswith("t,x,y"):
        rows = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        last = rows[rows[:, 0] == rows[-1, 0]]
        return last[:, 1:]
    return Polyline([(float(x), float(y)) for x, y in experiments.load_curve(path)])


def cmd_render(args):
    curves = [_read_any_curve(p) for p in args.inputs]
    render_svg(curves, args.out_svg, labels=args.labels or args.inputs)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="hcsflow", description="Homotopic curve shortening and affine flow experiments")
    p.add_argument("--config", help="JSON file whose keys mirror the long flags")
    sub = p.add_subparsers(dest="command", required=True)
    leaves = {}

    hcs = sub.add_parser("hcs", help="homotopic curve shortening").add_subparsers(dest="action", required=True)
    r = hcs.add_parser("run", help="snap a curve and iterate HCS")
    _add_curve_args(r, None)
    r.add_argument("--backend", choices=experiments.BACKENDS, default="grid")
    r.add_argument("--n", type=int, default=10_000, help="obstacle count (grid density)")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--max-steps", type=int)
    r.add_argument("--every", type=int, default=1, help="draw every k-th curve")
    r.add_argument("--out-svg")
    r.add_argument("--out-curve")
    r.set_defaults(func=cmd_hcs_run)
    leaves["hcs"] = r

    ac = sub.add_parser("acsf", help="affine curve-shortening flow").add_subparsers(dest="action", required=True)
    r = ac.add_parser("run", help="front-tracking simulation")
    _add_curve_args(r, None)
    r.add_argument("--m", type=int, default=1000, help="sample count")
    r.add_argument("--t-end", type=float, default=10.0)
    r.add_argument("--snapshots", type=int, default=10)
    r.add_argument("--out-csv")
    r.add_argument("--out-svg")
    r.set_defaults(func=cmd_acsf_run)
    leaves["acsf"] = r

    r = sub.add_parser("layers", help="convex layers of a point set")
    g = r.add_mutually_exclusive_group()
    g.add_argument("--grid", default="4x4", help="WxH lattice")
    g.add_argument("--points", help="obstacle file ('# scale S' header, 'x y' lines)")
    r.add_argument("--check", action="store_true", help="compare against HCS from the hull")
    r.add_argument("--out-svg")
    r.set_defaults(func=cmd_layers)
    leaves["layers"] = r

    ex = sub.add_parser("experiment", help="HCS vs ACSF experiments").add_subparsers(dest="action", required=True)
    r = ex.add_parser("conjecture", help="iteration counts and constants")
    _add_curve_args(r, 0.7)
    r.add_argument("--backend", nargs="+", choices=experiments.BACKENDS, default=["grid"])
    r.add_argument("--n", nargs="+", type=lambda s: int(float(s)), default=[10_000])
    r.add_argument("--seeds", nargs="+", default=["0-4"])
    r.add_argument("--length-reference", choices=("snapped", "ideal"), default="snapped")
    r.add_argument("--m", type=int, default=1000, help="ACSF sample count")
    r.add_argument("--max-steps", type=int)
    r.add_argument("--workers", type=int, default=1)
    r.add_argument("--out-csv")
    r.add_argument("--omit-wall-time", action="store_true", help="leave wall_ms empty (byte-identical reruns)")
    r.add_argument("--convergence", action="store_true", help="h-distance of each N to --reference-n instead")
    r.add_argument("--reference-n", type=lambda s: int(float(s)), default=1_000_000)
    r.add_argument("--allow-large", action="store_true", help="permit N above the desk-scale limits")
    r.set_defaults(func=cmd_experiment)
    leaves["experiment"] = r

    r = sub.add_parser("render", help="overlay curves as SVG")
    r.add_argument("inputs", nargs="*", help="pcurve files, acsf CSVs or 'x y' point files")
    r.add_argument("--labels", nargs="*")
    r.add_argument("--out-svg", required=True)
    r.set_defaults(func=cmd_render)
    leaves["render"] = r
    return p, leaves


DESK_LIMITS = {"grid": 1_000_000, "random": 100_000}


def main(argv=None):
    parser, leaves = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        with open(args.config) as fh:
            cfg = json.load(fh)
        leaves[args.command].set_defaults(**{k.replace("-", "_"): v for k, v in cfg.items()})
        args = parser.parse_args(argv)
    if args.command == "experiment":
        args.seeds = _int_list(args.seeds)
        if not args.allow_large:
            for b in args.backend:
                big = [N for N in list(args.n) + ([args.reference_n] if args.convergence else []) if N > DESK_LIMITS[b]]
                if big:
                    parser.error(f"N={big[0]} exceeds the desk-scale limit for {b}; pass --allow-large")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
