import math

import numpy as np
import pytest

from hcsflow import _kernels, acsf
from hcsflow.experiments import DELTA, ideal_length
from hcsflow.geom import h_distance


def test_init_samples_circle():
    st = acsf.init(acsf.circle_points(1.0, 256), 1000)
    r = np.hypot(st.points[:, 0], st.points[:, 1])
    assert np.abs(r - 1).max() < 1e-3
    assert st.t == 0.0 and st.m == 1000


def test_init_square_corners():
    st = acsf.init([(0, 0), (1, 0), (1, 1), (0, 1)], 4)
    assert np.allclose(st.points, [(0, 0), (1, 0), (1, 1), (0, 1)])


def test_init_delta_length():
    st = acsf.init(DELTA, 1000)
    # uniform resampling cuts the sharp corners slightly
    assert st.length() == pytest.approx(ideal_length(DELTA), rel=2e-3)


def test_init_errors():
    with pytest.raises(ValueError):
        acsf.init([(0, 0), (0, 0), (0, 0)], 10)
    with pytest.raises(ValueError):
        acsf.init(DELTA, 2)


def test_curvature_circle():
    n, r = acsf.curvature_circle((-1, 0), (0, 1), (1, 0))
    assert r == pytest.approx(1.0) and np.allclose(n, (0, -1))
    n, r = acsf.curvature_circle((0, 0), (1, 1), (2, 2))
    assert r == math.inf and not n.any()
    _, r3 = acsf.curvature_circle((-3, 0), (0, 3), (3, 0))
    assert r3 == pytest.approx(3.0)
    with pytest.raises(ValueError):
        acsf.curvature_circle((0, 0), (0, 0), (1, 0))


def test_velocity_backends_agree():
    st = acsf.init(DELTA, 300)
    x, y = st.points[:, 0].copy(), st.points[:, 1].copy()
    x2, y2 = x.copy(), y.copy()
    _kernels._acsf_advance_py(x, y, 0.0, 3e-4, 3e-9, 0.0, 1.0, 50, 0.25)
    _kernels._acsf_advance_nb(x2, y2, 0.0, 3e-4, 3e-9, 0.0, 1.0, 50, 0.25)
    assert np.allclose(x, x2, atol=1e-12) and np.allclose(y, y2, atol=1e-12)


def test_step_matches_advance():
    st = acsf.init(DELTA, 200)
    a = acsf.step(acsf.step(st))
    b = st.copy()
    acsf.advance(b, max_steps=2)
    assert a.steps == b.steps == 2
    assert np.allclose(a.points, b.points, atol=1e-13)


def test_length_decreases_each_step():
    st = acsf.init(DELTA, 200)
    L = st.length()
    for _ in range(200):
        st = acsf.step(st)
        assert st.length() < L
        L = st.length()


def test_time_step_lower_clamp():
    st = acsf.init(acsf.circle_points(1e-4, 64), 64)
    assert acsf.time_step(st) == st.t_min


def test_circle_radius_law():
    st = acsf.init(acsf.circle_points(1.0, 256), 100)
    worst = 0.0
    for t in np.linspace(0.01, 0.74, 74):
        Ra = (1 - 4 * t / 3) ** 0.75
        if Ra < 0.1:
            break
        acsf.advance(st, t_end=t)
        worst = max(worst, abs(acsf.mean_radius(st.points) / Ra - 1))
    assert worst < 5e-3


def test_circle_half_length_time():
    r = acsf.run_to_length_fraction(acsf.init(acsf.circle_points(1.0, 256), 100), 0.5)
    assert r.t_star == pytest.approx(0.75 * (1 - 0.5 ** (4 / 3)), rel=1e-2)


def test_fraction_near_one_is_quick():
    r = acsf.run_to_length_fraction(acsf.init(acsf.circle_points(1.0, 256), 100), 0.999)
    assert r.reached and r.t_star == pytest.approx(0.75 * (1 - 0.999 ** (4 / 3)), rel=0.02)
    with pytest.raises(ValueError):
        acsf.run_to_length_fraction(acsf.init(DELTA, 50), 1.0)


def test_delta_reaches_70_percent_near_reference_time():
    r = acsf.run_to_length_fraction(acsf.init(DELTA, 1000), 0.7)
    assert r.reached
    assert r.t_star == pytest.approx(0.0266, rel=0.05)


def test_affine_equivariance():
    # area-preserving shear: the flow commutes with it at equal times
    M = np.array([[1.0, 0.5], [0.0, 1.0]])
    base = acsf.circle_points(1.0, 256) * [1.0, 0.6]
    a = acsf.init(base, 400)
    b = acsf.init(base @ M.T, 400)
    b.points = a.points @ M.T  # same samples, mapped
    acsf.advance(a, t_end=0.05)
    acsf.advance(b, t_end=0.05)
    scale = np.ptp(b.points, axis=0).max()
    assert h_distance(a.points @ M.T, b.points) < 0.01 * scale


def test_convex_stays_convex():
    st = acsf.init([(0, 0), (3, 0), (4, 2), (1, 3)], 300)
    for t in (0.05, 0.2, 0.5):
        acsf.advance(st, t_end=t)
        P = st.points
        a = np.roll(P, 1, 0) - P
        b = np.roll(P, -1, 0) - P
        cr = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
        assert (cr <= 1e-12).all() or (cr >= -1e-12).all()


def test_csv_output(tmp_path):
    p = tmp_path / "f.csv"
    acsf.write_csv(p, [(0.0, [(0, 0), (1, 0), (0, 1)]), (0.5, [(0.1, 0.1), (0.9, 0.1), (0.1, 0.9)])])
    lines = p.read_text().splitlines()
    assert lines[0] == "t,x,y" and len(lines) == 7
