import numpy as np

from hcsflow.obstacles import GridObstacleSet
from hcsflow.pcurve import polygon_curve
from hcsflow.render import render_svg, svg_text


def test_empty_is_valid_svg():
    s = svg_text([])
    assert s.startswith("<svg") and s.rstrip().endswith("</svg>")
    assert "<path" not in s


def test_single_square_one_path():
    s = svg_text([[(0, 0), (1, 0), (1, 1), (0, 1)]], labels=["square"])
    assert s.count("<path") == 1 and " Z" in s and "square" in s


def test_deterministic_bytes(tmp_path):
    g = GridObstacleSet(100)
    curves = [polygon_curve([(0, 0), (5, 1), (2, 4)], g), np.array([[0.0, 0.0], [0.03, 0.0], [0.0, 0.03]])]
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    render_svg(curves, a)
    render_svg(curves, b)
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().count("<path") == 2


def test_labels_escaped():
    s = svg_text([[(0, 0), (1, 0), (0, 1)]], labels=["a<b"])
    assert "a&lt;b" in s
