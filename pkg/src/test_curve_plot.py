"""
test_curve_plot.py
SVG evolüt çizimi testleri
"""

import xml.etree.ElementTree as ET

import pytest

from curve_expr import parse_curve
from curve_plot import EvolutePlotter, plot_evolutes


def svg_ids(path):
    root = ET.parse(path).getroot()
    return {el.get('id') for el in root.iter() if el.get('id')}


def level_ids(path):
    return {i for i in svg_ids(path) if i.startswith('curve_level_')}


def test_cusp_with_first_evolute(tmp_path):
    out = tmp_path / "cusp45.svg"
    report = plot_evolutes(parse_curve("t^4", "t^5"), 1, str(out), t_range=(-0.9, 0.9), samples=50)
    assert report['levels'] == 2
    assert report['warnings'] == []
    assert report['backend_used'] == 'rational'
    assert level_ids(out) == {'curve_level_0', 'curve_level_1'}
    assert 'origin_marker' in svg_ids(out)


def test_only_curve_for_m_zero(tmp_path):
    out = tmp_path / "curve.svg"
    plot_evolutes(parse_curve("t^2", "t^3"), 0, str(out), samples=20)
    assert level_ids(out) == {'curve_level_0'}


def test_two_samples_still_valid(tmp_path):
    out = tmp_path / "two.svg"
    report = plot_evolutes(parse_curve("t^4", "t^5"), 2, str(out), t_range=(-0.5, 0.5), samples=2)
    assert report['samples'] == 2
    assert level_ids(out) == {'curve_level_0', 'curve_level_1', 'curve_level_2'}


def test_creates_output_directory(tmp_path):
    out = tmp_path / "nested" / "dir" / "cycloid.svg"
    plot_evolutes(parse_curve("t - sin(t)", "1 - cos(t)"), 1, str(out), t_range=(-2, 2), samples=30)
    assert out.exists()
    assert len(level_ids(out)) == 2


def test_inflection_in_range_warns(tmp_path):
    out = tmp_path / "cubic.svg"
    report = plot_evolutes(parse_curve("t", "t^3"), 1, str(out), samples=20)
    assert any("ℓ" in w for w in report['warnings'])


def test_local_failure_falls_back_to_origin_jet(tmp_path):
    out = tmp_path / "quartic.svg"
    expr = parse_curve("t", "1/2*t^2 - 1/12*t^4")
    report = plot_evolutes(expr, 1, str(out), t_range=(-1, 1), samples=3)
    assert any("yerel çatı kurulamadı" in w for w in report['warnings'])
    assert level_ids(out) == {'curve_level_0', 'curve_level_1'}


def test_sample_levels_shapes():
    plotter = EvolutePlotter(parse_curve("t^4", "t^5"), 2, t_range=(-0.5, 0.5), samples=11)
    levels = plotter.sample_levels()
    assert len(levels) == 3
    assert all(points.shape == (11, 2) for points in levels)


def test_needs_two_samples():
    with pytest.raises(ValueError):
        EvolutePlotter(parse_curve("t", "t^2"), 1, samples=1)


def test_each_level_is_one_path(tmp_path):
    out = tmp_path / "paths.svg"
    plot_evolutes(parse_curve("t^4", "t^5"), 2, str(out), t_range=(-0.5, 0.5), samples=25)
    root = ET.parse(out).getroot()
    groups = [el for el in root.iter() if (el.get('id') or '').startswith('curve_level_')]
    assert len(groups) == 3
    for group in groups:
        paths = [el for el in group.iter() if el.tag.endswith('path')]
        assert len(paths) == 1
