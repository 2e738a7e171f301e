import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hcsflow.engine import (CollapsedCurveError, ReleaseError, hcs_step, is_nailed, is_unstable, release_visit, run,
                            shorten)
from hcsflow.experiments import DELTA
from hcsflow.geom import polyline_length
from hcsflow.homotopy import homotopic, triangulate
from hcsflow.layers import hull_curve
from hcsflow.obstacles import ExplicitObstacleSet, GridObstacleSet, generate_random
from hcsflow.pcurve import PCurve, canonicalize, polygon_curve, snap_to_obstacles

G1 = GridObstacleSet(1)


def test_snap_delta_on_fine_grid_hits_its_vertices():
    g = GridObstacleSet(10_000)
    c = snap_to_obstacles(list(DELTA), g)
    corners = [(int(x * 100), int(y * 100)) for x, y in DELTA]
    turning = [c.points[i] for i in range(len(c)) if not c.is_nailed(i)]
    assert turning == corners
    assert all(c.is_nailed(i) for i in range(len(c)) if c.points[i] not in corners)


def test_snap_identity_and_square():
    tri = snap_to_obstacles([(0, 0), (3, 0), (0, 2)], G1)
    assert tri.points[:1] == ((0, 0),) and (3, 0) in tri.points and (0, 2) in tri.points
    sq = snap_to_obstacles([(0, 0), (2, 0), (2, 2), (0, 2)], G1)
    assert len(sq) == 8
    nailed = {sq.points[i] for i in range(8) if sq.is_nailed(i)}
    assert nailed == {(1, 0), (2, 1), (1, 2), (0, 1)}
    assert all(is_unstable(sq, i) for i in range(8) if not is_nailed(sq, i))


def test_snap_to_single_point_collapses():
    c = snap_to_obstacles([(0.1, 0.1), (0.2, 0.1), (0.1, 0.2)], G1)
    assert c.collapsed


def test_wound_straight_visit_is_nailed_and_stable():
    obs = ExplicitObstacleSet([(0, 0), (1, 0), (2, 0), (1, 1)])
    c = PCurve([(0, 0), (1, 0), (2, 0), (1, 1)], [0, 1, 0, 0], obs)
    assert c.alpha(1) == pytest.approx(3 * math.pi)
    assert c.is_nailed(1) and not c.is_unstable(1)


def test_stable_by_winding():
    obs = ExplicitObstacleSet([(0, 0), (1, 0), (0, 1)])
    c = PCurve([(0, 0), (0, 1), (1, 0)], [-1, 0, 0], obs)
    # principal pi/2 at (0,0) wound once clockwise: alpha = -3pi/2
    assert c.alpha(0) == pytest.approx(-1.5 * math.pi)
    assert not c.is_unstable(0)
    assert c.is_unstable(1)


def test_release_example_grid():
    c = polygon_curve([(0, 0), (1, 2), (3, 0)], G1)
    i = c.points.index((1, 2))
    r = release_visit(c, i)
    assert r.points[:4] == ((0, 0), (1, 1), (2, 1), (3, 0))
    assert r.length() < c.length()


def test_release_fold_adds_windings():
    # t -> p -> v -> p -> x, v a reversal; merged alpha at p = 3pi/4 + pi/2
    obs = ExplicitObstacleSet([(-1, -1), (0, 0), (1, 0), (0, 1)])
    c = PCurve([(-1, -1), (0, 0), (1, 0), (0, 0), (0, 1)], [0, 0, 0, 0, 0], obs)
    assert c.alpha(1) == pytest.approx(0.75 * math.pi)
    assert c.alpha(3) == pytest.approx(0.5 * math.pi)
    r = release_visit(c, 2)
    assert r.points == ((-1, -1), (0, 0), (0, 1))
    assert r.alpha(1) == pytest.approx(1.25 * math.pi)


def test_release_empty_triangle():
    obs = ExplicitObstacleSet([(0, 0), (0, 1), (1, 0)])
    c = PCurve([(0, 0), (0, 1), (1, 0)], [0, 0, 0], obs)
    r = release_visit(c, 1)
    assert r.points == ((0, 0), (1, 0))


def test_release_stable_visit_rejected():
    sq = snap_to_obstacles([(0, 0), (2, 0), (2, 2), (0, 2)], G1)
    with pytest.raises(ReleaseError):
        release_visit(sq, sq.points.index((1, 0)))


def test_shorten_stable_curve_unchanged():
    obs = ExplicitObstacleSet([(0, 0), (4, 0), (0, 4), (1, 1)])
    # CW around (1,1) with winding so nothing is releasable
    c = PCurve([(0, 0), (4, 0), (0, 4)], [-1, -1, -1], obs)
    assert shorten(c).same_curve(c)


def test_shorten_homotopic_and_not_longer():
    rng = random.Random(0)
    for it in range(40):
        obs = generate_random((0, 0, 1, 1), rng.randint(6, 40), seed=it, subdivision=128)
        vs = [rng.choice(obs.points) for _ in range(rng.randint(3, 7))]
        c = canonicalize(vs, obs, None)
        if c.collapsed:
            continue
        c = canonicalize(c.points, obs, [rng.choice([-1, 0, 0, 1]) for _ in c.points])
        s = shorten(c)
        assert s.length() <= c.length() + 1e-12
        assert homotopic(c, s, triangulate(obs.points))


def test_hcs_step_3x3_gives_diamond():
    box = ExplicitObstacleSet([(x, y) for x in range(3) for y in range(3)])
    c = hull_curve(box)
    d = hcs_step(c)
    assert set(d.points) == {(1, 0), (2, 1), (1, 2), (0, 1)}
    assert len(d) == 4


def test_hcs_step_empty_triangle_collapses():
    obs = ExplicitObstacleSet([(0, 0), (5, 1), (2, 4)])
    c = polygon_curve(obs.points, obs)
    assert hcs_step(c).collapsed
    assert run(c).steps_executed == 1


def test_hcs_step_rejects_collapsed():
    c = PCurve([(0, 0)], [0], G1)
    with pytest.raises(CollapsedCurveError):
        hcs_step(c)


def test_run_3x3_two_steps():
    box = ExplicitObstacleSet([(x, y) for x in range(3) for y in range(3)])
    tr = run(hull_curve(box))
    assert tr.steps_executed == 2 and tr.collapsed and tr.curves[-1].points == ((1, 1),)


def test_run_lengths_strictly_decrease():
    c = snap_to_obstacles(list(DELTA), GridObstacleSet(10_000))
    tr = run(c, stop="length_fraction", fraction=0.7)
    assert all(b < a for a, b in zip(tr.lengths, tr.lengths[1:]))
    assert tr.steps_executed == 20  # published count for the 100 x 100 grid


def test_run_stop_modes():
    c = snap_to_obstacles(list(DELTA), GridObstacleSet(10_000))
    assert run(c, stop="max_steps", max_steps=3).steps_executed == 3
    with pytest.raises(ValueError):
        run(c, stop="length_fraction")
    with pytest.raises(ValueError):
        run(c, stop="bogus")


def test_pcurve_text_roundtrip():
    c = snap_to_obstacles(list(DELTA), GridObstacleSet(10_000))
    c = hcs_step(c)
    back = PCurve.from_text(c.to_text())
    assert back == c and back.obstacles == c.obstacles
    obs = generate_random((0, 0, 1, 1), 30, seed=1)
    e = polygon_curve(obs.points[:5], obs)
    assert PCurve.from_text(e.to_text(), obs) == e
    with pytest.raises(ValueError):
        PCurve.from_text(e.to_text())


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), min_size=3, max_size=7),
       st.sampled_from(["fifo", "lifo", "random"]))
def test_every_release_shortens(pts, policy):
    c = canonicalize(pts, G1)
    if c.collapsed:
        return
    before = c.length()
    s = shorten(c, order_policy=policy)
    assert s.length() <= before + 1e-12


def test_canonical_grid_edges_primitive():
    from math import gcd
    c = canonicalize([(0, 0), (6, 3), (2, 9)], G1)
    n = len(c)
    for i in range(n):
        a, b = c.points[i], c.points[(i + 1) % n]
        assert gcd(b[0] - a[0], b[1] - a[1]) == 1
