"""Homotopy fingerprints of P-curves through triangulation edge sequences.

A curve is realized combinatorially: each straight piece is pushed an
infinitesimal distance to the left of travel, and around each visit the
curve follows a tiny arc that starts just clockwise of the incoming ray and
sweeps ``alpha`` (counter-clockwise when positive).  The edge sequence is
the ordered list of triangulation edges that realization crosses.  Two closed
curves are freely homotopic in the punctured plane iff their reduced
sequences agree up to rotation.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import cmp_to_key

import numpy as np

from .geom import cross, dot, orient2, sub


def _incircle(a, b, c, d):
    """> 0 iff d lies strictly inside the circle through a, b, c (abc counter-clockwise)."""
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    ad = adx * adx + ady * ady
    bd = bdx * bdx + bdy * bdy
    cd = cdx * cdx + cdy * cdy
    return (
        adx * (bdy * cd - bd * cdy)
        - ady * (bdx * cd - bd * cdx)
        + ad * (bdx * cdy - bdy * cdx)
    )


def _ekey(a, b):
    return (a, b) if a < b else (b, a)


class Triangulation:
    """Triangulation of the obstacles plus three far frame points.

    Vertices 0..n-1 are the obstacles, n..n+2 the frame.  Triangles are
    counter-clockwise vertex triples.  Convex-hull edges of the obstacles
    are always present, so triangles without a frame vertex triangulate the
    obstacles' hull.
    """

    def __init__(self, points, order="lex", seed=0, delaunay=True):
        pts = [tuple(int(c) for c in p) for p in points]
        if len(pts) < 3:
            raise ValueError("need at least 3 points")
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        p0 = pts[0]
        if all(orient2(p0, pts[1], q) == 0 for q in pts[2:]):
            raise ValueError("all points are collinear")
        self.n = len(pts)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        x0, y0 = min(xs), min(ys)
        L = max(max(xs) - x0, max(ys) - y0, 1)
        M = 4 * L
        frame = [(x0 - M, y0 - M), (x0 + 2 * L + 3 * M, y0 - M), (x0 - M, y0 + 2 * L + 3 * M)]
        self.points = pts + frame
        self.index = {p: i for i, p in enumerate(pts)}
        self.delaunay = delaunay
        self.tris = {}
        self.edge_tris = {}
        self._next_id = 0
        self._last = None
        self._add(self.n, self.n + 1, self.n + 2)
        ids = list(range(self.n))
        if order == "lex":
            ids.sort(key=lambda i: pts[i])
        elif order == "random":
            random.Random(seed).shuffle(ids)
        else:
            raise ValueError(f"unknown insertion order {order!r}")
        for i in ids:
            self._insert(i)
        self._recover_hull_edges()
        self.edges = sorted(self.edge_tris)
        self._incident = None
        self._edge_arrays = None

    # -- structure --------------------------------------------------

    def _add(self, a, b, c):
        P = self.points
        if orient2(P[a], P[b], P[c]) <= 0:
            raise AssertionError("triangle not counter-clockwise")
        t = self._next_id
        self._next_id += 1
        self.tris[t] = (a, b, c)
        for e in ((a, b), (b, c), (c, a)):
            self.edge_tris.setdefault(_ekey(*e), set()).add(t)
        self._last = t
        return t

    def _remove(self, t):
        a, b, c = self.tris.pop(t)
        for e in ((a, b), (b, c), (c, a)):
            k = _ekey(*e)
            s = self.edge_tris[k]
            s.discard(t)
            if not s:
                del self.edge_tris[k]

    def _other(self, t, a, b):
        for s in self.edge_tris.get(_ekey(a, b), ()):
            if s != t:
                return s
        return None

    def _locate(self, p):
        P = self.points
        t = self._last if self._last in self.tris else next(iter(self.tris))
        for _ in range(4 * len(self.tris) + 10):
            a, b, c = self.tris[t]
            moved = False
            for u, v in ((a, b), (b, c), (c, a)):
                if orient2(P[u], P[v], p) < 0:
                    nt = self._other(t, u, v)
                    if nt is None:
                        raise ValueError("point outside the frame")
                    t = nt
                    moved = True
                    break
            if not moved:
                return t
        # walks can cycle in non-Delaunay triangulations; scan instead
        for t, (a, b, c) in self.tris.items():
            if orient2(P[a], P[b], p) >= 0 and orient2(P[b], P[c], p) >= 0 and orient2(P[c], P[a], p) >= 0:
                return t
        raise ValueError("point location failed")

    def _insert(self, i):
        P = self.points
        p = P[i]
        t = self._locate(p)
        a, b, c = self.tris[t]
        on = [(u, v, w) for u, v, w in ((a, b, c), (b, c, a), (c, a, b)) if orient2(P[u], P[v], p) == 0]
        if not on:
            self._remove(t)
            self._add(a, b, i)
            self._add(b, c, i)
            self._add(c, a, i)
            self._legalize(i, a, b)
            self._legalize(i, b, c)
            self._legalize(i, c, a)
            return
        u, v, w = on[0]
        t2 = self._other(t, u, v)
        d = None
        if t2 is not None:
            d = next(x for x in self.tris[t2] if x != u and x != v)
            self._remove(t2)
        self._remove(t)
        self._add(u, i, w)
        self._add(i, v, w)
        if d is not None:
            self._add(v, i, d)
            self._add(i, u, d)
        self._legalize(i, v, w)
        self._legalize(i, w, u)
        if d is not None:
            self._legalize(i, u, d)
            self._legalize(i, d, v)

    def _legalize(self, p, a, b):
        """Edge ab lies opposite the new point p in triangle (a, b, p)."""
        if not self.delaunay:
            return
        stack = [(a, b)]
        P = self.points
        while stack:
            a, b = stack.pop()
            ts = self.edge_tris.get(_ekey(a, b), set())
            if len(ts) != 2:
                continue
            t1, t2 = tuple(ts)
            if p not in self.tris[t1]:
                t1, t2 = t2, t1
            if p not in self.tris[t1]:
                continue
            q = next(x for x in self.tris[t2] if x != a and x != b)
            # orient (a, b, p) counter-clockwise
            if orient2(P[a], P[b], P[p]) < 0:
                a, b = b, a
            if _incircle(P[a], P[b], P[p], P[q]) > 0 and self._flippable(a, b, p, q):
                self._flip(t1, t2, a, b, p, q)
                stack.append((a, q))
                stack.append((q, b))

    def _flippable(self, a, b, p, q):
        P = self.points
        return orient2(P[p], P[q], P[a]) != 0 and orient2(P[p], P[q], P[b]) != 0 and (
            (orient2(P[p], P[q], P[a]) > 0) != (orient2(P[p], P[q], P[b]) > 0)
        ) and ((orient2(P[a], P[b], P[p]) > 0) != (orient2(P[a], P[b], P[q]) > 0))

    def _flip(self, t1, t2, a, b, p, q):
        P = self.points
        self._remove(t1)
        self._remove(t2)
        for x, y, z in ((a, q, p), (q, b, p)):
            if orient2(P[x], P[y], P[z]) > 0:
                self._add(x, y, z)
            else:
                self._add(y, x, z)

    def _recover_hull_edges(self):
        P = self.points
        hull = _hull_boundary(P[: self.n])
        idx = self.index
        for s, e in zip(hull, hull[1:] + hull[:1]):
            a, b = idx[s], idx[e]
            guard = 0
            while _ekey(a, b) not in self.edge_tris:
                guard += 1
                if guard > 10 * len(self.tris):
                    raise RuntimeError("hull edge recovery did not converge")
                for k in list(self.edge_tris):
                    u, v = k
                    if u in (a, b) or v in (a, b):
                        continue
                    if _proper_cross(P[a], P[b], P[u], P[v]):
                        ts = tuple(self.edge_tris[k])
                        if len(ts) != 2:
                            continue
                        p = next(x for x in self.tris[ts[0]] if x != u and x != v)
                        q = next(x for x in self.tris[ts[1]] if x != u and x != v)
                        if self._flippable(u, v, p, q):
                            self._flip(ts[0], ts[1], u, v, p, q)
                            break

    # -- queries -----------------------------------------------------

    def triangles(self):
        return [self.tris[t] for t in sorted(self.tris)]

    def interior_triangles(self):
        """Triangles without a frame vertex."""
        return [t for t in self.triangles() if max(t) < self.n]

    def incident(self, v):
        if self._incident is None:
            inc = {}
            for a, b in self.edges:
                inc.setdefault(a, []).append(b)
                inc.setdefault(b, []).append(a)
            self._incident = inc
        return self._incident.get(v, [])

    def structure(self):
        return (tuple(self.points), tuple(sorted(tuple(sorted(t)) for t in self.tris.values())))

    def crossings(self, p, q):
        """Edges crossed properly by the open segment pq, ordered from p to q."""
        if self._edge_arrays is None:
            E = np.array(self.edges, dtype=np.int64)
            Pa = np.array(self.points, dtype=np.int64 if _small(self.points) else object)
            self._edge_arrays = (Pa[E[:, 0]], Pa[E[:, 1]])
        A, B = self._edge_arrays
        o1 = (q[0] - p[0]) * (A[:, 1] - p[1]) - (q[1] - p[1]) * (A[:, 0] - p[0])
        o2 = (q[0] - p[0]) * (B[:, 1] - p[1]) - (q[1] - p[1]) * (B[:, 0] - p[0])
        o3 = (B[:, 0] - A[:, 0]) * (p[1] - A[:, 1]) - (B[:, 1] - A[:, 1]) * (p[0] - A[:, 0])
        o4 = (B[:, 0] - A[:, 0]) * (q[1] - A[:, 1]) - (B[:, 1] - A[:, 1]) * (q[0] - A[:, 0])
        hit = (o1 * o2 < 0) & (o3 * o4 < 0)
        out = []
        for j in np.nonzero(hit)[0].tolist():
            t = Fraction(int(o3[j]), int(o3[j]) - int(o4[j]))
            out.append((t, self.edges[j]))
        out.sort()
        return [e for _, e in out]


def _small(points):
    return all(abs(c) < (1 << 30) for p in points for c in p)


def _proper_cross(a, b, c, d):
    o1, o2 = orient2(a, b, c), orient2(a, b, d)
    o3, o4 = orient2(c, d, a), orient2(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def _hull_boundary(points):
    """Counter-clockwise hull boundary including points inside hull edges."""
    pts = sorted(set(points))

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient2(out[-2], out[-1], p) < 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def triangulate(points, order="lex", seed=0, delaunay=True) -> Triangulation:
    if hasattr(points, "points") and not isinstance(points, (list, tuple)):
        points = points.points
    return Triangulation(points, order=order, seed=seed, delaunay=delaunay)


# ---------------------------------------------------------------------------
# edge sequences


def _ccw_cmp(r):
    """Comparator ordering direction vectors by CCW angle from r, in [0, 2 pi)."""

    def half(d):
        c = cross(r, d)
        if c > 0 or (c == 0 and dot(r, d) > 0):
            return 0
        return 1

    def cmp(d1, d2):
        h1, h2 = half(d1), half(d2)
        if h1 != h2:
            return h1 - h2
        c = cross(d1, d2)
        return -1 if c > 0 else (1 if c < 0 else 0)

    return cmp


def _arc_crossings(T: Triangulation, prev, p, nxt, k):
    vi = T.index.get(p)
    if vi is None:
        return []
    r_in = sub(prev, p)
    r_out = sub(nxt, p)
    cmp = _ccw_cmp(r_in)
    inc = [(sub(T.points[j], p), j) for j in T.incident(vi)]
    inc.sort(key=cmp_to_key(lambda x, y: cmp(x[0], y[0])))
    # alpha = pr + 2 pi k, rewritten as P + 2 pi K with P the CCW angle
    # from r_in to r_out in [0, 2 pi); A_j is the CCW angle of edge j
    K = k if _pr_sign(r_in, r_out) >= 0 else k - 1
    out = []
    if K >= 0:
        # counter-clockwise sweep: crossed while A_j + 2 pi m <= alpha
        order = inc
        counts = [K + 1 if cmp(d, r_out) <= 0 else K for d, _ in order]
    else:
        # clockwise sweep: crossed while (2 pi - A_j) + 2 pi m < |alpha|
        J = -(K + 1)
        order = inc[::-1]
        counts = [J + 1 if cmp(d, r_out) > 0 else J for d, _ in order]
    rounds = max(counts, default=0)
    for m in range(rounds):
        for (d, j), cnt in zip(order, counts):
            if cnt > m:
                out.append(_ekey(vi, j))
    return out


def _pr_sign(r_in, r_out):
    """Sign of the principal angle from r_in to r_out (a half turn is +1)."""
    c = cross(r_in, r_out)
    if c > 0:
        return 1
    if c < 0:
        return -1
    return 0 if dot(r_in, r_out) > 0 else 1


def edge_sequence(curve, T: Triangulation, closed=True):
    """Edges crossed by the combinatorial realization of a P-curve or P-path.

    ``curve`` is a PCurve or a list of (point, k) visits.  For a path the
    first and last visits are fixed endpoints and contribute no arc.
    """
    if hasattr(curve, "visits"):
        visits = curve.visits()
    else:
        visits = [(tuple(p), int(k)) for p, k in curve]
    n = len(visits)
    if n == 0:
        return []
    if n == 1:
        # a one-visit curve is a loop of |k| full turns around its obstacle
        p, k = visits[0]
        vi = T.index.get(tuple(p))
        if not k or vi is None:
            return []
        cmp = _ccw_cmp((1, 0))
        inc = sorted(((sub(T.points[j], p), j) for j in T.incident(vi)), key=cmp_to_key(lambda x, y: cmp(x[0], y[0])))
        ring = [_ekey(vi, j) for _, j in inc]
        if k < 0:
            ring = ring[::-1]
        return ring * abs(k)
    seq = []
    rng = range(n) if closed else range(n - 1)
    for i in rng:
        p, k = visits[i]
        q = visits[(i + 1) % n][0]
        if closed or i > 0:
            prev = visits[i - 1][0]
            if prev != p and q != p:
                seq.extend(_arc_crossings(T, prev, p, q, k))
        if p != q:
            seq.extend(T.crossings(p, q))
    return seq


def reduce(seq, closed=True):
    """Cancel adjacent equal pairs (circularly for closed sequences)."""
    out = []
    for e in seq:
        if out and out[-1] == e:
            out.pop()
        else:
            out.append(e)
    if closed:
        i, j = 0, len(out) - 1
        while j > i and out[i] == out[j]:
            i += 1
            j -= 1
        out = out[i : j + 1]
    return out


def _canonical_rotation(seq):
    if not seq:
        return ()
    n = len(seq)
    best = min(range(n), key=lambda s: seq[s:] + seq[:s])
    return tuple(seq[best:] + seq[:best])


def homotopic(a, b, T: Triangulation) -> bool:
    """Closed curves: reduced edge sequences equal up to rotation."""
    ra = reduce(edge_sequence(a, T, closed=True))
    rb = reduce(edge_sequence(b, T, closed=True))
    if len(ra) != len(rb):
        return False
    return _canonical_rotation(ra) == _canonical_rotation(rb)


def _path_fingerprint(path, T: Triangulation):
    seq = reduce(edge_sequence(path, T, closed=False), closed=False)
    s = T.index.get(tuple(path[0][0]))
    e = T.index.get(tuple(path[-1][0]))
    changed = True
    while changed:
        changed = False
        while seq and s is not None and s in seq[0]:
            seq = seq[1:]
            changed = True
        while seq and e is not None and e in seq[-1]:
            seq = seq[:-1]
            changed = True
        if changed:
            seq = reduce(seq, closed=False)
    return tuple(seq)


def homotopic_paths(a, b, T: Triangulation) -> bool:
    """Paths with common fixed endpoints, given as lists of (point, k) visits."""
    if tuple(a[0][0]) != tuple(b[0][0]) or tuple(a[-1][0]) != tuple(b[-1][0]):
        return False
    return _path_fingerprint(a, T) == _path_fingerprint(b, T)
