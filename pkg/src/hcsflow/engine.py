"""Homotopic curve shortening: vertex release, shortening, HCS steps and runs."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .geom import angle_sign, compare_angles, orient2, sub
from .pcurve import PCurve, is_straight_at

POLICIES = ("fifo", "lifo", "random")


class CollapsedCurveError(ValueError):
    pass


class ReleaseError(ValueError):
    pass


def _wrap_k(k, delta_sign, cmp_new_old):
    # pr_new = pr_old + delta (mod 2 pi); crossing the branch cut shows up as
    # the new principal value moving against the sign of delta
    if delta_sign > 0 and cmp_new_old < 0:
        return k + 1
    if delta_sign < 0 and cmp_new_old > 0:
        return k - 1
    return k


class _Ring:
    """Doubly linked circular list of visits, mutated by releases."""

    def __init__(self, curve: PCurve, anchors=()):
        n = len(curve)
        self.obs = curve.obstacles
        self.pts = list(curve.points)
        self.k = list(curve.k)
        self.nxt = [(i + 1) % n for i in range(n)]
        self.prv = [(i - 1) % n for i in range(n)]
        self.alive = [True] * n
        self.anchor = [False] * n
        for a in anchors:
            self.anchor[a] = True
        self.size = n
        self.head = 0
        self.releases = 0

    def _new(self, p, k):
        self.pts.append(p)
        self.k.append(k)
        self.nxt.append(-1)
        self.prv.append(-1)
        self.alive.append(True)
        self.anchor.append(False)
        self.size += 1
        return len(self.pts) - 1

    def _unlink(self, i):
        a, b = self.prv[i], self.nxt[i]
        self.nxt[a] = b
        self.prv[b] = a
        self.alive[i] = False
        self.size -= 1
        if self.head == i:
            self.head = b

    def unstable(self, i) -> bool:
        if not self.alive[i] or self.anchor[i] or self.size < 2 or self.k[i] != 0:
            return False
        return not is_straight_at(self.pts[self.prv[i]], self.pts[i], self.pts[self.nxt[i]])

    def _shift(self, i, old_ray, new_ray, ray_is_next):
        """Rotate one ray at visit i and carry the winding across the branch cut."""
        if self.anchor[i]:
            return
        p = self.pts[i]
        if ray_is_next:
            fixed = sub(self.pts[self.prv[i]], p)
            s = angle_sign(old_ray, new_ray)
            c = compare_angles(fixed, new_ray, fixed, old_ray)
        else:
            fixed = sub(self.pts[self.nxt[i]], p)
            s = angle_sign(new_ray, old_ray)
            c = compare_angles(new_ray, fixed, old_ray, fixed)
        self.k[i] = _wrap_k(self.k[i], s, c)

    def release(self, v):
        """Release unstable visit v; returns visit ids whose stability may have changed."""
        if not self.unstable(v):
            raise ReleaseError("only unstable, unanchored visits can be released")
        self.releases += 1
        iu, iw = self.prv[v], self.nxt[v]
        if iu == iw:
            # two-visit ring: the curve shrinks onto the other visit
            self._unlink(v)
            return [iu]
        u, pv, w = self.pts[iu], self.pts[v], self.pts[iw]
        if u == w:
            return self._release_fold(iu, v, iw)
        if orient2(u, pv, w) == 0:
            raise ReleaseError("collinear release on a non-canonical curve")
        path = self.obs.release_path(u, pv, w)
        positive = angle_sign(sub(u, pv), sub(w, pv)) > 0
        seq = [u] + path + [w]
        new_ids = []
        for j, p in enumerate(path, 1):
            if orient2(seq[j - 1], p, seq[j + 1]) == 0:
                kk = -1 if positive else 0
            else:
                kk = -1 if positive else 1
            new_ids.append(self._new(p, kk))
        first = path[0] if path else w
        last = path[-1] if path else u
        self._shift(iu, sub(pv, u), sub(first, u), ray_is_next=True)
        self._shift(iw, sub(pv, w), sub(last, w), ray_is_next=False)
        chain = [iu] + new_ids + [iw]
        for a, b in zip(chain, chain[1:]):
            self.nxt[a] = b
            self.prv[b] = a
        self.alive[v] = False
        self.size -= 1
        if self.head == v:
            self.head = iu
        return [iu, iw]

    def _release_fold(self, iu, v, iw):
        # u and w are the same point: the curve went out to v and came back
        au, aw = self.anchor[iu], self.anchor[iw]
        if au and aw:
            self._unlink(v)
            return []
        if au:
            self._unlink(v)
            self._unlink(iw)
            return [iu, self.nxt[iu]]
        if aw:
            self._unlink(v)
            self._unlink(iu)
            return [iw, self.prv[iw]]
        p = self.pts[iu]
        t = self.pts[self.prv[iu]]
        x = self.pts[self.nxt[iw]]
        to_v = sub(self.pts[v], p)
        to_x = sub(x, p)
        # add alpha_w onto alpha_u: the increment's principal part is pr_w
        s = angle_sign(to_v, to_x)
        if t == p:
            c = 0
        else:
            fixed = sub(t, p)
            c = compare_angles(fixed, to_x, fixed, to_v)
        k = _wrap_k(self.k[iu] + self.k[iw], s, c)
        self._unlink(v)
        self._unlink(iw)
        self.k[iu] = k
        return [iu]

    def order(self):
        out = []
        i = self.head
        for _ in range(self.size):
            out.append(i)
            i = self.nxt[i]
        return out

    def to_curve(self, start=None) -> PCurve:
        ids = self.order()
        if start is not None and start in ids:
            s = ids.index(start)
            ids = ids[s:] + ids[:s]
        return PCurve([self.pts[i] for i in ids], [self.k[i] for i in ids], self.obs)


def _run_release_loop(ring: _Ring, policy: str, seed):
    if policy not in POLICIES:
        raise ValueError(f"unknown order policy {policy!r}")
    if policy == "random":
        rng = random.Random(seed)
        pool = [i for i in ring.order() if ring.unstable(i)]
        while pool:
            j = rng.randrange(len(pool))
            pool[j], pool[-1] = pool[-1], pool[j]
            i = pool.pop()
            if ring.unstable(i):
                pool.extend(x for x in ring.release(i) if ring.unstable(x))
        return
    work = deque(i for i in ring.order() if ring.unstable(i))
    take = work.popleft if policy == "fifo" else work.pop
    while work:
        i = take()
        if ring.unstable(i):
            work.extend(x for x in ring.release(i) if ring.unstable(x))


def is_nailed(c: PCurve, i: int) -> bool:
    return c.is_nailed(i)


def is_unstable(c: PCurve, i: int) -> bool:
    return c.is_unstable(i)


def release_visit(c: PCurve, i: int) -> PCurve:
    """Release one unstable visit and return the resulting canonical curve."""
    ring = _Ring(c)
    ring.release(i)
    return ring.to_curve()


def shorten(c: PCurve, anchors=(), order_policy: str = "fifo", seed=0) -> PCurve:
    """Release unstable unanchored visits until none is left.

    The result does not depend on the release order except where a
    null-homotopic curve shrinks to a point, which may land on any obstacle
    it passed.
    """
    ring = _Ring(c, anchors)
    _run_release_loop(ring, order_policy, seed)
    return ring.to_curve()


@dataclass
class StepDetail:
    """Anchor-to-anchor pieces of one HCS step, before and after shortening."""

    anchors: list
    before: list
    after: list


def _pieces(ring: _Ring, anchor_ids):
    ids = ring.order()
    if not anchor_ids:
        return [[(ring.pts[i], ring.k[i]) for i in ids]]
    s = ids.index(min(anchor_ids))
    ids = ids[s:] + ids[:s]
    pos = [j for j, i in enumerate(ids) if i in anchor_ids]
    out = []
    for a, b in zip(pos, pos[1:] + [pos[0] + len(ids)]):
        out.append([(ring.pts[ids[j % len(ids)]], ring.k[ids[j % len(ids)]]) for j in range(a, b + 1)])
    return out


def hcs_step(c: PCurve, order_policy: str = "fifo", seed=0, detail: bool = False):
    """One HCS iteration.

    Nailed visits stay fixed as anchors; every other visit is shortcut
    (its winding reset to the principal value, which makes it unstable) and
    the pieces between anchors are shortened.  Coinciding anchors are merged.
    Afterwards a bent anchor gets its principal winding; one that is still
    straight keeps its old winding, which records the side it passes on.
    """
    if c.collapsed:
        raise CollapsedCurveError("cannot step a collapsed curve")
    n = len(c)
    anchors = [i for i in range(n) if c.is_nailed(i)]
    aset = set(anchors)
    k0 = [c.k[i] if i in aset else 0 for i in range(n)]
    shortcut = PCurve(c.points, k0, c.obstacles)
    ring = _Ring(shortcut, anchors)
    before = _pieces(ring, aset) if detail else None
    _run_release_loop(ring, order_policy, seed)
    after = _pieces(ring, aset) if detail else None
    ids = ring.order()
    pts, ks = [], []
    for i in ids:
        kk = ring.k[i]
        if ring.anchor[i] and not is_straight_at(ring.pts[ring.prv[i]], ring.pts[i], ring.pts[ring.nxt[i]]):
            kk = 0
        if pts and pts[-1] == ring.pts[i]:
            # coinciding anchors merge into one visit
            ks[-1] = 0
            continue
        pts.append(ring.pts[i])
        ks.append(kk)
    while len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
        ks.pop()
        ks[0] = 0
    if len(pts) == 1:
        ks = [0]
    out = PCurve(pts, ks, c.obstacles)
    if detail:
        return out, StepDetail(anchors=[c.points[i] for i in anchors], before=before, after=after)
    return out


@dataclass
class HcsTrace:
    curves: list = field(default_factory=list)
    lengths: list = field(default_factory=list)
    steps_executed: int = 0
    collapsed: bool = False
    stop_reason: str = ""


def run(c: PCurve, stop: str = "collapse", fraction: float | None = None, max_steps: int | None = None,
        keep_curves: bool = True, order_policy: str = "fifo") -> HcsTrace:
    """Iterate hcs_step until the stop condition holds.

    ``stop`` is "collapse", "length_fraction" (length <= fraction * initial)
    or "max_steps".  A collapse always ends the run, and ``max_steps`` caps
    any mode.
    """
    if stop not in ("collapse", "length_fraction", "max_steps"):
        raise ValueError(f"unknown stop condition {stop!r}")
    if stop == "length_fraction" and not (fraction is not None and 0 < fraction <= 1):
        raise ValueError("length_fraction needs 0 < fraction <= 1")
    if stop == "max_steps" and max_steps is None:
        raise ValueError("max_steps stop needs max_steps")
    L0 = c.length()
    trace = HcsTrace(curves=[c] if keep_curves else [c], lengths=[L0])
    cur = c
    while True:
        if cur.collapsed:
            trace.collapsed = True
            trace.stop_reason = "collapse"
            break
        if stop == "length_fraction" and trace.steps_executed > 0 and cur.length() <= fraction * L0:
            trace.stop_reason = "length_fraction"
            break
        if max_steps is not None and trace.steps_executed >= max_steps:
            trace.stop_reason = "max_steps"
            break
        cur = hcs_step(cur, order_policy=order_policy)
        trace.steps_executed += 1
        trace.lengths.append(cur.length())
        if keep_curves:
            trace.curves.append(cur)
        else:
            trace.curves = [c, cur]
    return trace
