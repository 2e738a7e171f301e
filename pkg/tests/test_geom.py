import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hcsflow.geom import (Orientation, Polyline, compare_angles, curves_disjoint, h_distance, h_distance_sq_exact,
                          inflection_edge_count, is_simple, orient, orient2, polyline_length, principal_angle,
                          segments_intersect, total_abs_curvature)
from hcsflow.obstacles import ExplicitObstacleSet
from hcsflow.pcurve import PCurve

coord = st.integers(-10**6, 10**6)
pt = st.tuples(coord, coord)

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
L_HEX = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


def test_orient_basic():
    assert orient((0, 0), (1, 0), (0, 1)) == Orientation.CCW
    assert orient((0, 0), (0, 1), (1, 0)) == Orientation.CW
    assert orient((0, 0), (1, 1), (2, 2)) == Orientation.COLLINEAR


def test_orient_huge_coordinates_exact():
    big = 10**40
    assert orient2((0, 0), (big, big + 1), (big + 1, big + 2)) != 0
    assert orient2((0, 0), (big, big), (3 * big, 3 * big)) == 0


@given(pt, pt, pt)
def test_orient_antisymmetric(a, b, c):
    o = orient2(a, b, c)
    assert orient2(b, a, c) == -o
    assert orient2(a, c, b) == -o
    assert orient2(c, b, a) == -o


@given(pt, pt, pt, pt)
def test_orient_translation_invariant(a, b, c, t):
    sh = lambda p: (p[0] + t[0], p[1] + t[1])
    assert orient2(a, b, c) == orient2(sh(a), sh(b), sh(c))


def test_principal_angle_range():
    assert principal_angle((1, 0), (0, 1)) == pytest.approx(math.pi / 2)
    assert principal_angle((1, 0), (0, -1)) == pytest.approx(-math.pi / 2)
    assert principal_angle((1, 0), (-1, 0)) == math.pi
    assert principal_angle((1, 0), (2, 0)) == 0.0


@given(pt, pt, pt, pt)
def test_compare_angles_matches_float(a1, b1, a2, b2):
    if (0, 0) in (a1, b1, a2, b2):
        return
    f1, f2 = principal_angle(a1, b1), principal_angle(a2, b2)
    c = compare_angles(a1, b1, a2, b2)
    if abs(f1 - f2) > 1e-9:
        assert c == (1 if f1 > f2 else -1)


def test_total_abs_curvature_examples():
    assert total_abs_curvature(SQUARE) == pytest.approx(2 * math.pi)
    assert total_abs_curvature(L_HEX) == pytest.approx(3 * math.pi)


def test_total_abs_curvature_wound_visit():
    obs = ExplicitObstacleSet([(0, 0), (1, 0), (2, 0), (1, 1)])
    # straight through (1,0) after a full wrap: alpha = 3 pi
    c = PCurve([(0, 0), (1, 0), (2, 0), (1, 1)], [0, 1, 0, 0], obs)
    assert c.alpha(1) == pytest.approx(3 * math.pi)
    plain = PCurve(c.points, [0, 0, 0, 0], obs)
    assert total_abs_curvature(c) - total_abs_curvature(plain) == pytest.approx(2 * math.pi)


def test_total_abs_curvature_degenerate_warns():
    with pytest.warns(RuntimeWarning):
        assert total_abs_curvature([(0, 0), (1, 0)]) == 0.0


@given(st.lists(st.tuples(st.integers(-50, 50), st.integers(-50, 50)), min_size=3, max_size=30, unique=True))
def test_convex_hull_curvature_is_two_pi(pts):
    from hcsflow.layers import hull_vertices
    hv = hull_vertices(sorted(pts))
    if len(hv) >= 3:
        assert total_abs_curvature(hv) == pytest.approx(2 * math.pi)


def test_nonconvex_simple_curvature_exceeds_two_pi():
    assert total_abs_curvature([(0, 0), (4, 0), (2, 1), (2, 3)]) > 2 * math.pi + 1e-9


def test_inflection_examples():
    assert inflection_edge_count(SQUARE) == 0
    assert inflection_edge_count([(0, 0), (4, 0), (2, 1), (2, 3)]) == 2
    assert inflection_edge_count(L_HEX) == 2


def test_inflection_rejects_non_simple():
    with pytest.raises(ValueError):
        inflection_edge_count([(0, 0), (2, 2), (2, 0), (0, 2)])


@given(st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), min_size=3, max_size=9, unique=True))
def test_inflection_count_even(pts):
    if is_simple(pts):
        try:
            assert inflection_edge_count(pts) % 2 == 0
        except ValueError:
            pass


def test_is_simple_examples():
    assert is_simple([(0, 0), (1, 0), (0, 1)])
    assert not is_simple([(0, 0), (2, 2), (2, 0), (0, 2)])
    assert not is_simple([(0, 0), (1, 1), (2, 0), (2, 2), (1, 1), (0, 2)])


def test_is_simple_touching_vertex_on_edge():
    # vertex (1,0) lies on the edge (0,0)-(2,0)... through a different visit
    assert not is_simple([(0, 0), (2, 0), (2, 2), (1, 0), (0, 2)])


def test_segments_intersect():
    assert segments_intersect((0, 0), (2, 2), (0, 2), (2, 0))
    assert segments_intersect((0, 0), (2, 0), (1, 0), (3, 0))
    assert not segments_intersect((0, 0), (1, 0), (2, 0), (3, 0))


def test_curves_disjoint():
    a = [(0, 0), (3, 0), (3, 3), (0, 3)]
    b = [(1, 1), (2, 1), (2, 2)]
    assert curves_disjoint(a, b)
    assert not curves_disjoint(a, [(1, 1), (4, 1), (2, 2)])


def test_polyline_length():
    assert polyline_length(SQUARE) == 4.0
    assert polyline_length([(5, 5)]) == 0.0
    assert polyline_length(Polyline([(0, 0), (3, 4)], closed=False)) == 5.0


def test_h_distance_examples():
    sq = np.array(SQUARE, float)
    assert h_distance(sq, sq) == 0.0
    assert h_distance(sq, sq + [0.1, 0.0]) == pytest.approx(0.1)
    a = Polyline([(0, 0), (1, 0)], closed=False)
    b = Polyline([(0, 3), (1, 3)], closed=False)
    assert h_distance(a, b, closed=False) == pytest.approx(3.0)


def test_h_distance_exact_square():
    sq = [(0, 0), (10, 0), (10, 10), (0, 10)]
    sh = [(x + 1, y) for x, y in sq]
    assert h_distance_sq_exact(sq, sh) == Fraction(1)


@given(st.lists(pt, min_size=2, max_size=8), st.lists(pt, min_size=2, max_size=8))
def test_h_distance_symmetric_nonneg(a, b):
    d1, d2 = h_distance(np.array(a, float), np.array(b, float)), h_distance(np.array(b, float), np.array(a, float))
    assert d1 >= 0
    assert d1 == pytest.approx(d2)


@given(st.lists(st.tuples(st.integers(-100, 100), st.integers(-100, 100)), min_size=3, max_size=8))
def test_h_distance_zero_on_subdivision(pts):
    # inserting edge midpoints does not move the curve
    sub = []
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        sub += [a, ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)]
    assert h_distance_sq_exact(pts, [(Fraction(x), Fraction(y)) for x, y in sub]) == 0


def test_reversal_visit_counts_half_turn():
    from hcsflow.obstacles import GridObstacleSet
    c = PCurve([(0, 0), (2, 0), (1, 1)], [0, 0, 0], GridObstacleSet(1))
    folded = PCurve([(0, 0), (2, 0), (1, 0)], [0, 0, 0], GridObstacleSet(1))
    assert total_abs_curvature(c) == pytest.approx(2 * math.pi)
    # two reversals and one straight pass-through
    assert total_abs_curvature(folded) == pytest.approx(2 * math.pi)
