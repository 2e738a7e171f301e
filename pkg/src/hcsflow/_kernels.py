"""Hot inner loops, each with a numba build and a plain numpy/Python build.

Set ``HCSFLOW_DISABLE_NUMBA=1`` before import to force the fallback path.
Both builds compute identical results on integer inputs; the float kernels
agree to rounding.
"""
from __future__ import annotations

import math
import os

import numpy as np

_DISABLED = os.environ.get("HCSFLOW_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("disabled by HCSFLOW_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


BACKEND = "numba" if HAVE_NUMBA else "numpy"

# int64 cross products stay exact while |coordinate| <= 2**30
INT64_SAFE = 1 << 30

ACSF_RUNNING = 0
ACSF_REACHED_LENGTH = 1
ACSF_REACHED_TIME = 2
ACSF_BLOWUP = 3
ACSF_MAX_STEPS = 4


# ---------------------------------------------------------------------------
# lattice chain walk (grid release)


def _egcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b != 0:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _grid_chain_py(ux, uy, vx, vy, wx, wy):
    s2 = (ux - vx) * (wy - vy) - (uy - vy) * (wx - vx)
    if s2 == 0:
        raise ValueError("collinear triangle")
    s = 1 if s2 > 0 else -1
    # interior tests use the orientation of the triangle u, v, w
    S = 1 if ((vx - ux) * (wy - uy) - (vy - uy) * (wx - ux)) > 0 else -1
    edges = ((ux, uy, vx, vy), (vx, vy, wx, wy), (wx, wy, ux, uy))
    gu = _gcd(ux - vx, uy - vy)
    ex, ey = (vx - ux) // gu, (vy - uy) // gu
    out_x, out_y = [], []
    for j in range(1, gu):
        out_x.append(ux + j * ex)
        out_y.append(uy + j * ey)
    zx, zy = vx - ex, vy - ey
    gw = _gcd(wx - vx, wy - vy)
    fx, fy = (wx - vx) // gw, (wy - vy) // gw
    qx, qy = vx + fx, vy + fy
    limit = 4 * (abs(ux - vx) + abs(uy - vy) + abs(wx - vx) + abs(wy - vy)) + 16
    steps = 0
    while zx != qx or zy != qy:
        steps += 1
        if steps > limit:
            raise RuntimeError("lattice chain walk did not terminate")
        ax, ay = zx - vx, zy - vy
        g, p, q = _egcd(abs(ax), abs(ay))
        if ax < 0:
            p = -p
        if ay < 0:
            q = -q
        # ax*p + ay*q = 1, so cross(a, (-s*q, s*p)) = s
        bx, by = vx - s * q, vy + s * p
        lo, hi = None, None
        for (Ax, Ay, Bx, By) in edges:
            c0 = S * ((Bx - Ax) * (by - Ay) - (By - Ay) * (bx - Ax))
            c1 = S * ((Bx - Ax) * ay - (By - Ay) * ax)
            if c1 > 0:
                b = -(c0 // c1)
                lo = b if lo is None or b > lo else lo
            elif c1 < 0:
                b = c0 // (-c1)
                hi = b if hi is None or b < hi else hi
            elif c0 < 0:
                raise RuntimeError("lattice chain walk left the triangle")
        if lo is None or (hi is not None and lo > hi):
            raise RuntimeError("no lattice point on the next chain line")
        zx, zy = bx + lo * ax, by + lo * ay
        out_x.append(zx)
        out_y.append(zy)
    if gw == 1:
        # the walk ended on w itself
        out_x.pop()
        out_y.pop()
    else:
        for j in range(2, gw):
            out_x.append(vx + j * fx)
            out_y.append(vy + j * fy)
    return np.array(out_x, dtype=np.int64), np.array(out_y, dtype=np.int64)


@njit(cache=True)
def _grid_chain_nb(ux, uy, vx, vy, wx, wy):
    s2 = (ux - vx) * (wy - vy) - (uy - vy) * (wx - vx)
    if s2 == 0:
        raise ValueError("collinear triangle")
    s = 1 if s2 > 0 else -1
    S = 1 if ((vx - ux) * (wy - uy) - (vy - uy) * (wx - ux)) > 0 else -1
    ex_ = np.empty((3, 4), dtype=np.int64)
    ex_[0, 0], ex_[0, 1], ex_[0, 2], ex_[0, 3] = ux, uy, vx, vy
    ex_[1, 0], ex_[1, 1], ex_[1, 2], ex_[1, 3] = vx, vy, wx, wy
    ex_[2, 0], ex_[2, 1], ex_[2, 2], ex_[2, 3] = wx, wy, ux, uy
    a_, b_ = abs(ux - vx), abs(uy - vy)
    while b_:
        a_, b_ = b_, a_ % b_
    gu = a_
    ex, ey = (vx - ux) // gu, (vy - uy) // gu
    a_, b_ = abs(wx - vx), abs(wy - vy)
    while b_:
        a_, b_ = b_, a_ % b_
    gw = a_
    fx, fy = (wx - vx) // gw, (wy - vy) // gw
    qx, qy = vx + fx, vy + fy
    cap = 64
    out = np.empty((cap, 2), dtype=np.int64)
    n = 0
    for j in range(1, gu):
        if n == cap:
            cap *= 2
            tmp = np.empty((cap, 2), dtype=np.int64)
            tmp[:n] = out[:n]
            out = tmp
        out[n, 0] = ux + j * ex
        out[n, 1] = uy + j * ey
        n += 1
    zx, zy = vx - ex, vy - ey
    limit = 4 * (abs(ux - vx) + abs(uy - vy) + abs(wx - vx) + abs(wy - vy)) + 16
    steps = 0
    while zx != qx or zy != qy:
        steps += 1
        if steps > limit:
            raise RuntimeError("lattice chain walk did not terminate")
        ax, ay = zx - vx, zy - vy
        a, b = abs(ax), abs(ay)
        x0, y0, x1, y1 = 1, 0, 0, 1
        while b != 0:
            q = a // b
            a, b = b, a - q * b
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        p, q = x0, y0
        if ax < 0:
            p = -p
        if ay < 0:
            q = -q
        bx, by = vx - s * q, vy + s * p
        has_lo, has_hi = False, False
        lo, hi = 0, 0
        for e in range(3):
            Ax, Ay, Bx, By = ex_[e, 0], ex_[e, 1], ex_[e, 2], ex_[e, 3]
            c0 = S * ((Bx - Ax) * (by - Ay) - (By - Ay) * (bx - Ax))
            c1 = S * ((Bx - Ax) * ay - (By - Ay) * ax)
            if c1 > 0:
                bb = -(c0 // c1)
                if not has_lo or bb > lo:
                    lo = bb
                    has_lo = True
            elif c1 < 0:
                bb = c0 // (-c1)
                if not has_hi or bb < hi:
                    hi = bb
                    has_hi = True
            elif c0 < 0:
                raise RuntimeError("lattice chain walk left the triangle")
        if not has_lo or (has_hi and lo > hi):
            raise RuntimeError("no lattice point on the next chain line")
        zx, zy = bx + lo * ax, by + lo * ay
        if n == cap:
            cap *= 2
            tmp = np.empty((cap, 2), dtype=np.int64)
            tmp[:n] = out[:n]
            out = tmp
        out[n, 0] = zx
        out[n, 1] = zy
        n += 1
    if gw == 1:
        n -= 1
    else:
        for j in range(2, gw):
            if n == cap:
                cap *= 2
                tmp = np.empty((cap, 2), dtype=np.int64)
                tmp[:n] = out[:n]
                out = tmp
            out[n, 0] = vx + j * fx
            out[n, 1] = vy + j * fy
            n += 1
    return out[:n, 0].copy(), out[:n, 1].copy()


def grid_chain(u, v, w):
    """All lattice points on the v-facing hull boundary of (closed triangle uvw minus v).

    Points are returned in order from u to w, excluding u and w, collinear
    points included.
    """
    if HAVE_NUMBA and max(abs(u[0]), abs(u[1]), abs(v[0]), abs(v[1]), abs(w[0]), abs(w[1])) < INT64_SAFE:
        return _grid_chain_nb(u[0], u[1], v[0], v[1], w[0], w[1])
    return _grid_chain_py(u[0], u[1], v[0], v[1], w[0], w[1])


# ---------------------------------------------------------------------------
# lattice enumeration in a closed triangle (column ranges)


def _triangle_columns_py(ux, uy, vx, vy, wx, wy):
    S = (vx - ux) * (wy - uy) - (vy - uy) * (wx - ux)
    if S == 0:
        raise ValueError("degenerate triangle")
    S = 1 if S > 0 else -1
    x0 = min(ux, vx, wx)
    x1 = max(ux, vx, wx)
    xs = np.arange(x0, x1 + 1, dtype=np.int64)
    lo = np.full(xs.shape, np.iinfo(np.int64).min // 4, dtype=np.int64)
    hi = np.full(xs.shape, np.iinfo(np.int64).max // 4, dtype=np.int64)
    for (Ax, Ay, Bx, By) in ((ux, uy, vx, vy), (vx, vy, wx, wy), (wx, wy, ux, uy)):
        # S * ((Bx-Ax)*(y-Ay) - (By-Ay)*(x-Ax)) >= 0
        k = S * (Bx - Ax)
        r = S * (By - Ay) * (xs - Ax)
        if k > 0:
            # y - Ay >= r / k
            lo = np.maximum(lo, Ay - ((-r) // k))
        elif k < 0:
            hi = np.minimum(hi, Ay + ((-r) // (-k)))
        else:
            bad = r > 0
            lo = np.where(bad, hi + 1, lo)
    keep = lo <= hi
    return xs[keep], lo[keep], hi[keep]


@njit(cache=True)
def _triangle_columns_nb(ux, uy, vx, vy, wx, wy):
    S = (vx - ux) * (wy - uy) - (vy - uy) * (wx - ux)
    if S == 0:
        raise ValueError("degenerate triangle")
    S = 1 if S > 0 else -1
    x0 = min(ux, min(vx, wx))
    x1 = max(ux, max(vx, wx))
    m = x1 - x0 + 1
    xs = np.empty(m, dtype=np.int64)
    lo = np.empty(m, dtype=np.int64)
    hi = np.empty(m, dtype=np.int64)
    n = 0
    for x in range(x0, x1 + 1):
        l = -(1 << 60)
        h = 1 << 60
        ok = True
        for e in range(3):
            if e == 0:
                Ax, Ay, Bx, By = ux, uy, vx, vy
            elif e == 1:
                Ax, Ay, Bx, By = vx, vy, wx, wy
            else:
                Ax, Ay, Bx, By = wx, wy, ux, uy
            k = S * (Bx - Ax)
            r = S * (By - Ay) * (x - Ax)
            if k > 0:
                c = Ay - ((-r) // k)
                if c > l:
                    l = c
            elif k < 0:
                c = Ay + ((-r) // (-k))
                if c < h:
                    h = c
            elif r > 0:
                ok = False
        if ok and l <= h:
            xs[n] = x
            lo[n] = l
            hi[n] = h
            n += 1
    return xs[:n].copy(), lo[:n].copy(), hi[:n].copy()


def triangle_columns(u, v, w):
    """Per-column lattice ranges of the closed triangle uvw: (xs, ylo, yhi)."""
    if HAVE_NUMBA and max(abs(c) for p in (u, v, w) for c in p) < (1 << 28):
        return _triangle_columns_nb(u[0], u[1], v[0], v[1], w[0], w[1])
    return _triangle_columns_py(u[0], u[1], v[0], v[1], w[0], w[1])


# ---------------------------------------------------------------------------
# convex hull (strict vertices, counter-clockwise)


def _hull_py(xs, ys):
    order = np.lexsort((ys, xs))
    pts = [(int(xs[i]), int(ys[i]), int(i)) for i in order]
    if len(pts) <= 2:
        out = []
        for p in pts:
            if not out or (out[-1][0], out[-1][1]) != (p[0], p[1]):
                out.append(p)
        return np.array([p[2] for p in out], dtype=np.int64)

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return np.array([p[2] for p in hull], dtype=np.int64)


@njit(cache=True)
def _hull_nb(xs, ys, order):
    n = order.shape[0]
    H = np.empty(2 * n + 2, dtype=np.int64)
    k = 0
    for ii in range(n):
        i = order[ii]
        while k >= 2:
            o, a = H[k - 2], H[k - 1]
            t = (xs[a] - xs[o]) * (ys[i] - ys[o]) - (ys[a] - ys[o]) * (xs[i] - xs[o])
            if t <= 0:
                k -= 1
            else:
                break
        H[k] = i
        k += 1
    lower = k + 1
    for ii in range(n - 2, -1, -1):
        i = order[ii]
        while k >= lower:
            o, a = H[k - 2], H[k - 1]
            t = (xs[a] - xs[o]) * (ys[i] - ys[o]) - (ys[a] - ys[o]) * (xs[i] - xs[o])
            if t <= 0:
                k -= 1
            else:
                break
        H[k] = i
        k += 1
    return H[: k - 1].copy()


def convex_hull_indices(xs, ys):
    """Indices of the strict convex hull vertices, counter-clockwise, starting lexicographically lowest."""
    xs = np.asarray(xs)
    ys = np.asarray(ys)
    n = len(xs)
    if n == 0:
        return np.empty(0, dtype=np.int64)
    small = xs.dtype != object and n and max(abs(int(xs.max())), abs(int(xs.min())), abs(int(ys.max())), abs(int(ys.min()))) < INT64_SAFE
    if HAVE_NUMBA and small and n > 2:
        xi = xs.astype(np.int64)
        yi = ys.astype(np.int64)
        order = np.lexsort((yi, xi)).astype(np.int64)
        # drop exact duplicates, the scan assumes distinct points
        keep = np.ones(n, dtype=bool)
        sx, sy = xi[order], yi[order]
        keep[1:] = (sx[1:] != sx[:-1]) | (sy[1:] != sy[:-1])
        order = order[keep]
        if len(order) <= 2:
            return order
        return _hull_nb(xi, yi, order)
    return _hull_py(xs, ys)


# ---------------------------------------------------------------------------
# closed-triangle membership for explicit point arrays


def _in_triangle_py(xs, ys, u, v, w):
    S = (v[0] - u[0]) * (w[1] - u[1]) - (v[1] - u[1]) * (w[0] - u[0])
    sgn = 1 if S > 0 else -1
    m = np.ones(len(xs), dtype=bool)
    for A, B in ((u, v), (v, w), (w, u)):
        o = (B[0] - A[0]) * (ys - A[1]) - (B[1] - A[1]) * (xs - A[0])
        m &= (sgn * o) >= 0
    return m


@njit(cache=True)
def _in_triangle_nb(xs, ys, ux, uy, vx, vy, wx, wy):
    S = (vx - ux) * (wy - uy) - (vy - uy) * (wx - ux)
    sgn = 1 if S > 0 else -1
    n = xs.shape[0]
    m = np.empty(n, dtype=np.bool_)
    for i in range(n):
        x, y = xs[i], ys[i]
        o1 = (vx - ux) * (y - uy) - (vy - uy) * (x - ux)
        o2 = (wx - vx) * (y - vy) - (wy - vy) * (x - vx)
        o3 = (ux - wx) * (y - wy) - (uy - wy) * (x - wx)
        m[i] = sgn * o1 >= 0 and sgn * o2 >= 0 and sgn * o3 >= 0
    return m


def in_closed_triangle(xs, ys, u, v, w):
    """Boolean mask of points inside the closed (non-degenerate) triangle uvw."""
    if HAVE_NUMBA and xs.dtype == np.int64:
        return _in_triangle_nb(xs, ys, u[0], u[1], v[0], v[1], w[0], w[1])
    return _in_triangle_py(xs, ys, u, v, w)


# ---------------------------------------------------------------------------
# point-to-polyline distances (h-distance)


def _max_vertex_to_polyline_py(P, Q, closed):
    if len(Q) == 1:
        d = np.hypot(P[:, 0] - Q[0, 0], P[:, 1] - Q[0, 1])
        return float(d.max())
    A = Q
    B = np.roll(Q, -1, axis=0) if closed else Q[1:]
    if not closed:
        A = Q[:-1]
    AB = B - A
    L2 = np.einsum("ij,ij->i", AB, AB)
    L2 = np.where(L2 == 0, 1.0, L2)
    best = np.empty(len(P))
    chunk = max(1, 2_000_000 // max(len(A), 1))
    for s in range(0, len(P), chunk):
        p = P[s : s + chunk]
        dx = p[:, None, 0] - A[None, :, 0]
        dy = p[:, None, 1] - A[None, :, 1]
        t = np.clip((dx * AB[None, :, 0] + dy * AB[None, :, 1]) / L2[None, :], 0.0, 1.0)
        ex = dx - t * AB[None, :, 0]
        ey = dy - t * AB[None, :, 1]
        best[s : s + chunk] = np.sqrt((ex * ex + ey * ey).min(axis=1))
    return float(best.max())


@njit(cache=True)
def _max_vertex_to_polyline_nb(P, Q, closed):
    nq = Q.shape[0]
    nseg = nq if closed else nq - 1
    worst = 0.0
    for i in range(P.shape[0]):
        px, py = P[i, 0], P[i, 1]
        best = np.inf
        if nq == 1:
            best = (px - Q[0, 0]) ** 2 + (py - Q[0, 1]) ** 2
        for j in range(nseg):
            ax, ay = Q[j, 0], Q[j, 1]
            k = j + 1 if j + 1 < nq else 0
            bx, by = Q[k, 0], Q[k, 1]
            abx, aby = bx - ax, by - ay
            L2 = abx * abx + aby * aby
            dx, dy = px - ax, py - ay
            t = 0.0
            if L2 > 0:
                t = (dx * abx + dy * aby) / L2
                if t < 0.0:
                    t = 0.0
                elif t > 1.0:
                    t = 1.0
            ex, ey = dx - t * abx, dy - t * aby
            d = ex * ex + ey * ey
            if d < best:
                best = d
        if best > worst:
            worst = best
    return math.sqrt(worst)


def max_vertex_to_polyline(P, Q, closed=True):
    P = np.ascontiguousarray(P, dtype=float)
    Q = np.ascontiguousarray(Q, dtype=float)
    if HAVE_NUMBA:
        return _max_vertex_to_polyline_nb(P, Q, closed)
    return _max_vertex_to_polyline_py(P, Q, closed)


# ---------------------------------------------------------------------------
# front-tracking ACSF integration


def _acsf_velocity_np(x, y):
    """Normal velocity: unit normal towards the circumcentre times r**(-1/3)."""
    ax = np.roll(x, 1) - x
    ay = np.roll(y, 1) - y
    cx = np.roll(x, -1) - x
    cy = np.roll(y, -1) - y
    a2 = ax * ax + ay * ay
    c2 = cx * cx + cy * cy
    d = 2.0 * (ax * cy - ay * cx)
    flat = d == 0.0
    dsafe = np.where(flat, 1.0, d)
    ox = (cy * a2 - ay * c2) / dsafe
    oy = (ax * c2 - cx * a2) / dsafe
    r = np.hypot(ox, oy)
    rsafe = np.where(flat | (r == 0.0), 1.0, r)
    f = np.where(flat, 0.0, rsafe ** (-4.0 / 3.0))
    return ox * f, oy * f


def _relax_np(x, y, lam):
    # slide each sample along the chord direction of its neighbours, away from
    # the nearer one; a pure reparametrisation that keeps spacing even
    ax = np.roll(x, 1) - x
    ay = np.roll(y, 1) - y
    cx = np.roll(x, -1) - x
    cy = np.roll(y, -1) - y
    dp = np.hypot(ax, ay)
    dn = np.hypot(cx, cy)
    tx = cx - ax
    ty = cy - ay
    tl = np.hypot(tx, ty)
    tl = np.where(tl == 0.0, 1.0, tl)
    sh = 0.5 * lam * (dn - dp) / tl
    return sh * tx, sh * ty


def _closed_length_np(x, y):
    return float(np.sum(np.hypot(np.roll(x, -1) - x, np.roll(y, -1) - y)))


def _acsf_advance_py(x, y, t, c, t_min, target_len, t_end, max_steps, lam):
    steps = 0
    while True:
        dx = np.roll(x, -1) - x
        dy = np.roll(y, -1) - y
        seg = np.hypot(dx, dy)
        L = float(seg.sum())
        if not np.isfinite(L):
            return t, steps, ACSF_BLOWUP
        if L <= target_len:
            return t, steps, ACSF_REACHED_LENGTH
        if t >= t_end:
            return t, steps, ACSF_REACHED_TIME
        if steps >= max_steps:
            return t, steps, ACSF_MAX_STEPS
        dmin = float(seg.min())
        dt = max(c * dmin ** (4.0 / 3.0), t_min)
        if t + dt > t_end:
            dt = t_end - t
        vx, vy = _acsf_velocity_np(x, y)
        sx, sy = _relax_np(x, y, lam)
        x += dt * vx + sx
        y += dt * vy + sy
        t += dt
        steps += 1


@njit(cache=True)
def _acsf_advance_nb(x, y, t, c, t_min, target_len, t_end, max_steps, lam):
    n = x.shape[0]
    ux = np.empty(n)
    uy = np.empty(n)
    steps = 0
    while True:
        L = 0.0
        dmin = np.inf
        for i in range(n):
            j = i + 1 if i + 1 < n else 0
            s = math.sqrt((x[j] - x[i]) ** 2 + (y[j] - y[i]) ** 2)
            L += s
            if s < dmin:
                dmin = s
        if not np.isfinite(L):
            return t, steps, 3
        if L <= target_len:
            return t, steps, 1
        if t >= t_end:
            return t, steps, 2
        if steps >= max_steps:
            return t, steps, 4
        dt = max(c * dmin ** (4.0 / 3.0), t_min)
        if t + dt > t_end:
            dt = t_end - t
        for i in range(n):
            ip = i - 1 if i > 0 else n - 1
            inx = i + 1 if i + 1 < n else 0
            ax, ay = x[ip] - x[i], y[ip] - y[i]
            cx, cy = x[inx] - x[i], y[inx] - y[i]
            a2 = ax * ax + ay * ay
            c2 = cx * cx + cy * cy
            d = 2.0 * (ax * cy - ay * cx)
            wx, wy = 0.0, 0.0
            if d != 0.0:
                ox = (cy * a2 - ay * c2) / d
                oy = (ax * c2 - cx * a2) / d
                r = math.sqrt(ox * ox + oy * oy)
                if r > 0.0:
                    f = r ** (-4.0 / 3.0)
                    wx, wy = ox * f, oy * f
            tx, ty = cx - ax, cy - ay
            tl = math.sqrt(tx * tx + ty * ty)
            if tl == 0.0:
                tl = 1.0
            sh = 0.5 * lam * (math.sqrt(c2) - math.sqrt(a2)) / tl
            ux[i] = dt * wx + sh * tx
            uy[i] = dt * wy + sh * ty
        for i in range(n):
            x[i] += ux[i]
            y[i] += uy[i]
        t += dt
        steps += 1


def acsf_advance(x, y, t, c, t_min, target_len, t_end, max_steps, lam=0.25):
    """Advance the sampled front in place; returns (t, steps, status)."""
    args = (float(t), float(c), float(t_min), float(target_len), float(t_end), int(max_steps), float(lam))
    if HAVE_NUMBA:
        t, steps, status = _acsf_advance_nb(x, y, *args)
        return float(t), int(steps), int(status)
    return _acsf_advance_py(x, y, *args)


def acsf_velocity(x, y):
    """Per-sample normal velocity, numpy build."""
    return _acsf_velocity_np(np.asarray(x, float), np.asarray(y, float))


def relax_shift(x, y, lam):
    """Per-step tangential spacing correction, numpy build."""
    return _relax_np(np.asarray(x, float), np.asarray(y, float), float(lam))
