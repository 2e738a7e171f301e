"""Hypothesis properties of HCS runs on the unit grid."""
from hypothesis import given, strategies as st

from hcsflow.engine import hcs_step, run
from hcsflow.geom import total_abs_curvature
from hcsflow.obstacles import GridObstacleSet
from hcsflow.pcurve import canonicalize

GRID = GridObstacleSet(1)

polygons = st.lists(st.tuples(st.integers(0, 10), st.integers(0, 10)), min_size=3, max_size=8)
windings = st.lists(st.integers(-1, 1), min_size=8, max_size=8)
unimodular = st.sampled_from([((1, 0), (0, -1)), ((0, 1), (1, 0)), ((1, 2), (0, -1)), ((2, 1), (1, 1)), ((0, -1), (1, 0))])


def _curve(pts, ks):
    c = canonicalize(pts, GRID)
    if c.collapsed:
        return c
    return canonicalize(c.points, GRID, [k if i % 3 == 0 else 0 for i, k in enumerate(ks * len(c))][:len(c)])


@given(polygons, windings, unimodular, st.integers(-20, 20), st.integers(-20, 20))
def test_step_commutes_with_unimodular_maps(pts, ks, M, tx, ty):
    c = _curve(pts, ks)
    if c.collapsed:
        return
    (a, b), (cc, d) = M
    det = a * d - b * cc

    def T(p):
        return (a * p[0] + b * p[1] + tx, cc * p[0] + d * p[1] + ty)

    for _ in range(4):
        nxt = hcs_step(c)
        assert hcs_step(c.transformed(T, orientation=det)).same_curve(nxt.transformed(T, orientation=det))
        if nxt.collapsed:
            break
        c = nxt


@given(polygons)
def test_length_and_curvature_never_grow(pts):
    c = canonicalize(pts, GRID)
    if c.collapsed:
        return
    tr = run(c, stop="collapse", max_steps=60)
    assert all(b <= a + 1e-12 for a, b in zip(tr.lengths, tr.lengths[1:]))
    curv = [total_abs_curvature(x) if len(x) >= 3 else 0.0 for x in tr.curves]
    assert all(b <= a + 1e-9 for a, b in zip(curv, curv[1:]))
