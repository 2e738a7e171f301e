"""Time the numba kernels against their numpy/Python fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--end-to-end]

Each kernel is called once to warm up (compile) and then timed; the results
of the two builds are checked for agreement before timings are printed.
With --end-to-end, an HCS run of the built-in curve is also timed in two
subprocesses, one with HCSFLOW_DISABLE_NUMBA=1.
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from hcsflow import _kernels as K


def best_of(fn, repeat):
    fn()  # warm-up, includes jit compile
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(rng):
    tri = [tuple(int(v) for v in rng.integers(-1000, 1000, 2)) for _ in range(3)]
    while (tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1]) == (tri[1][1] - tri[0][1]) * (tri[2][0] - tri[0][0]):
        tri[2] = (tri[2][0] + 1, tri[2][1])
    xs = rng.integers(-1000, 1000, 200_000).astype(np.int64)
    ys = rng.integers(-1000, 1000, 200_000).astype(np.int64)
    P = rng.random((2000, 2))
    Q = rng.random((2000, 2))
    th = np.linspace(0, 2 * np.pi, 400, endpoint=False)
    circ = np.stack([np.cos(th), np.sin(th)], 1)
    u, v, w = tri
    flat = (*u, *v, *w)

    def acsf(adv):
        def go():
            x, y = circ[:, 0].copy(), circ[:, 1].copy()
            adv(x, y, 0.0, 3e-4, 3e-9, 0.0, 1.0, 2000, 0.25)
        return go

    return [
        ("grid_chain", lambda: K._grid_chain_py(*flat), lambda: K._grid_chain_nb(*flat)),
        ("triangle_columns", lambda: K._triangle_columns_py(*flat), lambda: K._triangle_columns_nb(*flat)),
        ("in_closed_triangle", lambda: K._in_triangle_py(xs, ys, u, v, w), lambda: K._in_triangle_nb(xs, ys, *flat)),
        ("max_vertex_to_polyline", lambda: K._max_vertex_to_polyline_py(P, Q, True),
         lambda: K._max_vertex_to_polyline_nb(P, Q, True)),
        ("acsf_advance (2000 steps)", acsf(K._acsf_advance_py), acsf(K._acsf_advance_nb)),
    ]


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.allclose(np.asarray(a, float), np.asarray(b, float))


def end_to_end(n):
    code = ("import time; from hcsflow import experiments as e, _kernels as K; t=time.perf_counter(); "
            f"r=e.run_cell(e.DELTA,'grid',{n},0,0.7,0.0266,[[0,0],[1,0],[1,1]]); "
            "print(K.BACKEND, r.m, round(time.perf_counter()-t, 3))")
    for flag in ("0", "1"):
        env = dict(os.environ, HCSFLOW_DISABLE_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, m, secs = out.stdout.split()
        print(f"  hcs delta N={n:<9d} {backend:>6s}: {m} iterations in {secs} s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--end-to-end", action="store_true")
    ap.add_argument("--n", type=int, default=100_000, help="grid density for the end-to-end run")
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        print("numba unavailable or disabled; only the fallback path exists")
        return 1
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':28s} {'numpy (ms)':>12s} {'numba (ms)':>12s} {'speedup':>9s}")
    for name, slow, fast in cases(rng):
        a, b = slow(), fast()
        if name.startswith("acsf"):
            ok = True  # in-place kernels; agreement is covered by the test suite
        else:
            ok = _same(a, b)
        ts, tf = best_of(slow, args.repeat), best_of(fast, args.repeat)
        flag = "" if ok else "  MISMATCH"
        print(f"{name:28s} {ts * 1e3:12.3f} {tf * 1e3:12.3f} {ts / tf:8.1f}x{flag}")
    if args.end_to_end:
        end_to_end(args.n)
    return 0


if __name__ == "__main__":
    sys.exit(main())
