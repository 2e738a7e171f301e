"""Point-obstacle sets: an implicit integer grid and an explicit indexed point set.

All obstacle coordinates are integers.  A set carries a ``scale`` that maps
integer coordinates back to the unit square used by the experiments
(real = integer / scale).
"""
from __future__ import annotations

import math
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from . import _kernels
from .geom import orient2
from .quadtree import QuadTree

RANDOM_SUBDIVISION = 1 << 20


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        # decimal literal as written, not the binary expansion
        return Fraction(repr(x))
    return Fraction(x)


def _round_scaled(x, N) -> int:
    """Nearest integer to x*sqrt(N), halves rounded down (exact)."""
    x = _as_fraction(x)
    a, b = x.numerator, x.denominator
    r = isqrt(N)
    if r * r == N:
        q = x * r
        f = math.floor(q)
        return f + 1 if q - f > Fraction(1, 2) else f
    # floor(a*sqrt(N)/b) by integer square roots
    s = isqrt(a * a * N)
    if a >= 0:
        f = s // b
    else:
        # a*sqrt(N) is irrational here, so the floor is -(ceil(|a| sqrt N / b))
        f = -(s // b) - 1
    # compare a*sqrt(N) against (2f+1) b / 2, i.e. 2a*sqrt(N) vs (2f+1) b
    lhs_sign = 1 if a > 0 else (-1 if a < 0 else 0)
    rhs = (2 * f + 1) * b
    rhs_sign = 1 if rhs > 0 else (-1 if rhs < 0 else 0)
    if lhs_sign != rhs_sign:
        above = lhs_sign > rhs_sign
    else:
        l2, r2 = 4 * a * a * N, rhs * rhs
        above = l2 > r2 if lhs_sign > 0 else l2 < r2
    return f + 1 if above else f


def _strict_chain(u, full, w):
    """Drop points of a convex chain that sit inside its edges."""
    seq = [u] + list(full) + [w]
    out = []
    for i in range(1, len(seq) - 1):
        if orient2(seq[i - 1], seq[i], seq[i + 1]) != 0:
            out.append(seq[i])
    return out


def _hull_chain(pts, u, v, w, xs=None, ys=None):
    """v-facing boundary chain of conv(pts) strictly between u and w (strict vertices)."""
    if xs is None:
        xs = np.array([p[0] for p in pts], dtype=np.int64 if _fits(pts) else object)
        ys = np.array([p[1] for p in pts], dtype=xs.dtype)
    H = [pts[i] for i in _kernels.convex_hull_indices(xs, ys).tolist()]
    if orient2(u, v, w) > 0:
        start, stop, rev = u, w, False
    else:
        start, stop, rev = w, u, True
    i = H.index(start)
    chain = []
    n = len(H)
    j = (i + 1) % n
    while H[j] != stop:
        chain.append(H[j])
        j = (j + 1) % n
    return chain[::-1] if rev else chain


def _fits(pts):
    return all(abs(c) < _kernels.INT64_SAFE for p in pts for c in p)


class ObstacleSet:
    """Abstract obstacle provider; subclasses implement the queries below."""

    scale: float = 1.0
    kind = "abstract"

    def contains(self, p) -> bool:
        raise NotImplementedError

    def points_in_closed_triangle(self, u, v, w) -> list:
        raise NotImplementedError

    def points_on_segment(self, a, b) -> list:
        raise NotImplementedError

    def nearest(self, p):
        raise NotImplementedError

    def release_chain(self, u, v, w) -> list:
        """Strict hull chain of (closed triangle uvw minus v), from u to w, facing v."""
        if orient2(u, v, w) == 0:
            raise ValueError("release needs a non-collinear triple")
        S = [p for p in self.points_in_closed_triangle(u, v, w) if p != v]
        return _hull_chain(S, u, v, w)

    def release_path(self, u, v, w) -> list:
        """Chain from u to w including obstacles inside its edges (u and w excluded)."""
        chain = self.release_chain(u, v, w)
        seq = [u] + chain + [w]
        out = []
        for a, b in zip(seq, seq[1:]):
            out.extend(self.points_on_segment(a, b))
            if b != w:
                out.append(b)
        return out

    def to_real(self, p):
        return (p[0] / self.scale, p[1] / self.scale)


class GridObstacleSet(ObstacleSet):
    """The integer lattice, read at density N points per unit area.

    Lattice point (i, j) stands for (i, j) / sqrt(N).  ``method`` picks the
    release algorithm: "gcd" walks the chain with the extended Euclidean
    algorithm, "brute" enumerates lattice columns and takes a hull.
    """

    kind = "grid"

    def __init__(self, density: int = 1, method: str = "gcd"):
        if density < 1:
            raise ValueError("density must be positive")
        if method not in ("gcd", "brute"):
            raise ValueError(f"unknown grid release method {method!r}")
        self.density = int(density)
        self.scale = math.sqrt(self.density)
        self.method = method

    def __repr__(self):
        return f"GridObstacleSet(density={self.density}, method={self.method!r})"

    def __eq__(self, other):
        return isinstance(other, GridObstacleSet) and other.density == self.density

    def __hash__(self):
        return hash(("grid", self.density))

    def contains(self, p) -> bool:
        return all(isinstance(c, (int, np.integer)) or (isinstance(c, Fraction) and c.denominator == 1) for c in p)

    def points_in_closed_triangle(self, u, v, w) -> list:
        if orient2(u, v, w) == 0:
            raise ValueError("degenerate triangle")
        xs, lo, hi = _kernels.triangle_columns(u, v, w)
        out = []
        for x, a, b in zip(xs.tolist(), lo.tolist(), hi.tolist()):
            out.extend((x, y) for y in range(a, b + 1))
        return out

    def points_on_segment(self, a, b) -> list:
        dx, dy = b[0] - a[0], b[1] - a[1]
        g = gcd(dx, dy)
        if g <= 1:
            return []
        sx, sy = dx // g, dy // g
        return [(a[0] + j * sx, a[1] + j * sy) for j in range(1, g)]

    def nearest(self, p):
        return (_round_scaled(p[0], self.density), _round_scaled(p[1], self.density))

    def release_chain(self, u, v, w) -> list:
        if self.method == "brute":
            return self.release_chain_brute(u, v, w)
        return release_chain_grid_gcd(u, v, w, require_primitive=False)

    def release_chain_brute(self, u, v, w) -> list:
        if orient2(u, v, w) == 0:
            raise ValueError("release needs a non-collinear triple")
        xs, lo, hi = _kernels.triangle_columns(u, v, w)
        lo, hi = lo.copy(), hi.copy()
        # v is an end of its own column; the next lattice point takes its place
        atv = xs == v[0]
        lo[atv & (lo == v[1])] += 1
        hi[atv & (hi == v[1])] -= 1
        ok = lo <= hi
        xs, lo, hi = xs[ok], lo[ok], hi[ok]
        two = hi != lo
        px = np.concatenate([xs, xs[two]])
        py = np.concatenate([lo, hi[two]])
        pts = list(zip(px.tolist(), py.tolist()))
        return _hull_chain(pts, u, v, w, px, py)

    def release_path(self, u, v, w) -> list:
        if self.method == "gcd":
            if orient2(u, v, w) == 0:
                raise ValueError("release needs a non-collinear triple")
            xs, ys = _kernels.grid_chain(u, v, w)
            return list(zip(xs.tolist(), ys.tolist()))
        return ObstacleSet.release_path(self, u, v, w)


def release_chain_grid_gcd(u, v, w, require_primitive=True) -> list:
    """Release chain on the integer grid by the extended-gcd walk.

    With ``require_primitive`` the legs v-u and w-v must be primitive, which
    is what the engine guarantees; the walk itself handles any legs.
    """
    if orient2(u, v, w) == 0:
        raise ValueError("release needs a non-collinear triple")
    if require_primitive and (gcd(v[0] - u[0], v[1] - u[1]) != 1 or gcd(w[0] - v[0], w[1] - v[1]) != 1):
        raise ValueError("legs v-u and w-v must be primitive lattice vectors")
    xs, ys = _kernels.grid_chain(u, v, w)
    return _strict_chain(u, list(zip(xs.tolist(), ys.tolist())), w)


def release_chain(u, v, w, obs: ObstacleSet) -> list:
    return obs.release_chain(u, v, w)


class ExplicitObstacleSet(ObstacleSet):
    """A finite set of distinct integer points, indexed by a quadtree.

    ``scale`` is the integer denominator of the coordinates.
    """

    kind = "explicit"

    def __init__(self, points, scale: int = 1, seed=None, region=None):
        pts = [(int(x), int(y)) for x, y in points]
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate obstacle points")
        self.points = pts
        self.scale = scale
        self.seed = seed
        self.region = region
        self._set = set(pts)
        dtype = np.int64 if _fits(pts) else object
        self.xs = np.array([p[0] for p in pts], dtype=dtype)
        self.ys = np.array([p[1] for p in pts], dtype=dtype)
        self.tree = QuadTree(self.xs, self.ys)

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"ExplicitObstacleSet(n={len(self.points)}, scale={self.scale}, seed={self.seed})"

    def __eq__(self, other):
        return isinstance(other, ExplicitObstacleSet) and self._set == other._set and self.scale == other.scale

    def __hash__(self):
        return hash(("explicit", len(self.points), self.scale))

    def contains(self, p) -> bool:
        return (p[0], p[1]) in self._set

    def points_in_closed_triangle(self, u, v, w) -> list:
        if orient2(u, v, w) == 0:
            raise ValueError("degenerate triangle")
        cand = self.tree.query_box(min(u[0], v[0], w[0]), min(u[1], v[1], w[1]), max(u[0], v[0], w[0]), max(u[1], v[1], w[1]))
        if len(cand) == 0:
            return []
        m = _kernels.in_closed_triangle(self.xs[cand], self.ys[cand], u, v, w)
        sel = cand[m]
        return [self.points[i] for i in sel.tolist()]

    def points_on_segment(self, a, b) -> list:
        cand = self.tree.query_box(min(a[0], b[0]), min(a[1], b[1]), max(a[0], b[0]), max(a[1], b[1]))
        out = []
        for i in cand.tolist():
            p = self.points[i]
            if p != a and p != b and orient2(a, b, p) == 0:
                out.append(p)
        d = (b[0] - a[0], b[1] - a[1])
        out.sort(key=lambda p: (p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1])
        return out

    def nearest(self, p):
        """Closest obstacle to a real point p; ties go to the lexicographically smallest."""
        px = _as_fraction(p[0]) * self.scale
        py = _as_fraction(p[1]) * self.scale
        fx = self.xs.astype(float) - float(px)
        fy = self.ys.astype(float) - float(py)
        d = fx * fx + fy * fy
        best = float(d.min())
        # float distances can misorder near-ties; settle those exactly
        cand = np.nonzero(d <= best * (1 + 1e-9) + 1e-6)[0]

        def key(i):
            q = self.points[i]
            return ((q[0] - px) ** 2 + (q[1] - py) ** 2, q)

        return self.points[min(cand.tolist(), key=key)]

    def to_text(self) -> str:
        lines = [f"# scale {self.scale}"]
        lines.extend(f"{x} {y}" for x, y in self.points)
        return "\n".join(lines) + "\n"

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.to_text())

    @classmethod
    def from_text(cls, text: str) -> "ExplicitObstacleSet":
        scale = 1
        pts = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2 and parts[0] == "scale":
                    scale = int(parts[1])
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'x y'")
            pts.append((int(parts[0]), int(parts[1])))
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate obstacle points in input")
        return cls(pts, scale=scale)

    @classmethod
    def load(cls, path) -> "ExplicitObstacleSet":
        with open(path) as fh:
            return cls.from_text(fh.read())


def _collinear_offenders(P: np.ndarray) -> list:
    """Indices j such that some i < j and some other point are collinear with them.

    Exhaustive: for every i, directions to later points are reduced by their
    gcd and sign-normalized; a repeated direction means three collinear points.
    """
    n = len(P)
    bad = set()
    for i in range(n - 2):
        d = P[i + 1 :] - P[i]
        g = np.gcd(d[:, 0], d[:, 1])
        g[g == 0] = 1
        d = d // g[:, None]
        flip = (d[:, 0] < 0) | ((d[:, 0] == 0) & (d[:, 1] < 0))
        d[flip] *= -1
        key = d[:, 0] * (1 << 22) + d[:, 1]
        order = np.argsort(key, kind="stable")
        ks = key[order]
        dup = np.nonzero(ks[1:] == ks[:-1])[0]
        for t in dup:
            bad.add(int(i + 1 + max(order[t], order[t + 1])))
    return sorted(bad)


def _sampled_collinear(P: np.ndarray, rng, trials: int) -> list:
    n = len(P)
    idx = rng.integers(0, n, size=(trials, 3))
    a, b, c = P[idx[:, 0]], P[idx[:, 1]], P[idx[:, 2]]
    o = (b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0])
    distinct = (idx[:, 0] != idx[:, 1]) & (idx[:, 1] != idx[:, 2]) & (idx[:, 0] != idx[:, 2])
    hit = np.nonzero((o == 0) & distinct)[0]
    return sorted({int(idx[h].max()) for h in hit})


def generate_random(region=(0, 0, 1, 1), count: int = 100, seed: int = 0, subdivision: int = RANDOM_SUBDIVISION,
                    exhaustive_limit: int = 1000, sampled_triples: int = 200_000) -> ExplicitObstacleSet:
    """Uniform random obstacles on a fine lattice inside an axis-aligned box.

    Duplicates and detected collinear triples are resampled, so the result
    is in general position (exhaustively checked up to ``exhaustive_limit``
    points, by sampled triples above that).
    """
    if count < 3:
        raise ValueError("need at least 3 points")
    x0, y0, x1, y1 = (_as_fraction(c) for c in region)
    if not (x1 > x0 and y1 > y0):
        raise ValueError("degenerate region")
    lx, ly = math.ceil(x0 * subdivision), math.ceil(y0 * subdivision)
    hx, hy = math.floor(x1 * subdivision), math.floor(y1 * subdivision)
    if (hx - lx + 1) * (hy - ly + 1) < count:
        raise ValueError("region too small for the requested count")
    rng = np.random.default_rng(seed)

    def draw(k):
        return np.stack([rng.integers(lx, hx + 1, size=k), rng.integers(ly, hy + 1, size=k)], axis=1)

    P = draw(count)
    for _ in range(1000):
        # resample later copies of duplicates
        _, first = np.unique(P, axis=0, return_index=True)
        dup = np.setdiff1d(np.arange(count), first)
        if len(dup):
            P[dup] = draw(len(dup))
            continue
        if count <= exhaustive_limit:
            bad = _collinear_offenders(P)
        else:
            bad = _sampled_collinear(P, rng, sampled_triples)
        if not bad:
            break
        P[bad] = draw(len(bad))
    else:  # pragma: no cover - astronomically unlikely
        raise RuntimeError("could not reach general position")
    return ExplicitObstacleSet([tuple(map(int, p)) for p in P], scale=subdivision, seed=seed, region=tuple(region))


def nearest(p, obs: ObstacleSet):
    return obs.nearest(p)
