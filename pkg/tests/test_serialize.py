"""Tests for CSV emitters and the SVG renderer: formats, determinism,
and structural well-formedness."""

import xml.etree.ElementTree as ET

import numpy as np
import pytest

from meanex import (
    DomainError,
    ExperimentReport,
    GpdParams,
    InputError,
    OlsFit,
    PlotSpec,
    band_constants,
    band_csv,
    band_series,
    compare_csv,
    consistency_band,
    curve_csv,
    experiment_csv,
    fit_csv,
    line_series,
    make_curve,
    make_grid,
    make_sample,
    svg_plot,
)
from meanex.serialize import fmt, write_text


# ---------------------------------------------------------------------------
# number formatting


def test_fmt_short_and_precise():
    assert fmt(1.0) == "1"
    assert fmt(0.5) == "0.5"
    assert fmt(1.0 / 3.0) == "0.333333333333"
    assert fmt(float("nan")) == "nan"


# ---------------------------------------------------------------------------
# CSV emitters


def test_curve_csv_format():
    curve = make_curve(make_grid([0.0, 2.0, 10.0]), [2.0, 1.0, 0.0])
    assert curve_csv(curve) == "u,e\n0,2\n2,1\n10,0\n"


def test_curve_csv_nan_rendering():
    curve = make_curve(make_grid([0.0, 1.0]), [1.0, float("nan")])
    assert curve_csv(curve) == "u,e\n0,1\n1,nan\n"


def test_band_csv_format():
    rng = np.random.default_rng(0)
    s = make_sample(rng.exponential(1.0, 500))
    g = make_grid([0.0, 0.5, 1.0])
    band = consistency_band(s, g, band_constants(0.0, 1.0), survival_u1=0.4, mean_abs=1.0)
    text = band_csv(band)
    lines = text.strip().split("\n")
    assert lines[0] == "u,e,lower,upper"
    assert len(lines) == 4
    assert all(len(line.split(",")) == 4 for line in lines[1:])


def test_fit_csv_format():
    text = fit_csv(GpdParams(0.25, 1.0), OlsFit(a_hat=1.0 / 3.0, b_hat=4.0 / 3.0, r2=1.0, n_points=20))
    lines = text.strip().split("\n")
    assert lines[0] == "xi_hat,beta_hat,a_hat,b_hat,r2"
    assert lines[1] == "0.25,1,0.333333333333,1.33333333333,1"


def test_experiment_csv_format():
    rep = ExperimentReport(
        name="coverage", metrics=(("coverage", 0.97), ("eps", 0.05)), replicate_count=500, seed=1
    )
    text = experiment_csv(rep)
    lines = text.strip().split("\n")
    assert lines[0] == "# name=coverage,seed=1,reps=500"
    assert lines[1] == "metric,value"
    assert lines[2] == "coverage,0.97"
    assert lines[3] == "eps,0.05"


def test_compare_csv_format_and_guard():
    g = make_grid([0.0, 1.0])
    a = make_curve(g, [1.0, 2.0])
    b = make_curve(g, [1.5, 2.5])
    text = compare_csv(a, b)
    assert text == "u,e_data,e_model\n0,1,1.5\n1,2,2.5\n"
    c = make_curve(make_grid([0.0, 2.0]), [1.0, 2.0])
    with pytest.raises(DomainError):
        compare_csv(a, c)


def test_csv_byte_determinism():
    curve = make_curve(make_grid([0.0, 1.0 / 3.0, 2.0]), [2.0, 1.5, np.pi])
    assert curve_csv(curve) == curve_csv(curve)


def test_write_text_lf_endings(tmp_path):
    path = tmp_path / "out.csv"
    write_text(path, "a,b\n1,2\n")
    raw = path.read_bytes()
    assert b"\r" not in raw
    assert raw.endswith(b"\n")


# ---------------------------------------------------------------------------
# SVG renderer


def _svg(series, **kw):
    return svg_plot(series, PlotSpec(**kw))


def test_svg_well_formed_xml():
    svg = _svg([line_series("emef", [0.0, 1.0, 2.0], [1.0, 2.0, 1.5])], title="demo")
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")


def test_svg_one_path_per_line_series():
    svg = _svg(
        [
            line_series("a", [0.0, 1.0], [1.0, 2.0]),
            line_series("b", [0.0, 1.0], [2.0, 1.0]),
        ]
    )
    assert svg.count("<path") == 2


def test_svg_band_series_renders_envelope():
    x = [0.0, 1.0, 2.0]
    svg = _svg([band_series("band", x, [0.5, 0.6, 0.7], [1.5, 1.6, 1.7], center=[1.0, 1.1, 1.2])])
    # a closed filled region plus the center line
    assert svg.count("<path") == 2
    assert 'fill-opacity' in svg


def test_svg_legend_and_axis_labels():
    svg = _svg(
        [line_series("mef curve", [0.0, 1.0], [1.0, 2.0])],
        xlabel="threshold",
        ylabel="mean excess",
        title="legend check",
    )
    assert "mef curve" in svg
    assert "threshold" in svg
    assert "mean excess" in svg
    assert "legend check" in svg


def test_svg_escapes_labels():
    svg = _svg([line_series("a<b & c", [0.0, 1.0], [1.0, 2.0])])
    assert "a&lt;b &amp; c" in svg
    assert "a<b" not in svg


def test_svg_nan_splits_path():
    svg = _svg([line_series("gap", [0.0, 1.0, 2.0, 3.0], [1.0, 2.0, float("nan"), 1.5])])
    start = svg.index("<path")
    end = svg.index("/>", start)
    d = svg[start:end]
    assert d.count("M") == 2  # the undefined point restarts the polyline


def test_svg_deterministic():
    series = [line_series("emef", [0.0, 1.0, 2.0], [1.0, 2.0, 1.5])]
    assert _svg(series) == _svg(series)


def test_svg_respects_dimensions():
    svg = _svg([line_series("a", [0.0, 1.0], [0.0, 1.0])], width=400, height=300)
    root = ET.fromstring(svg)
    assert root.get("width") == "400"
    assert root.get("height") == "300"


def test_svg_rejects_all_nan():
    with pytest.raises(InputError, match="no finite data"):
        _svg([line_series("empty", [0.0, 1.0], [float("nan"), float("nan")])])


def test_svg_single_point_series():
    svg = _svg([line_series("dot", [1.0], [1.0])])
    ET.fromstring(svg)
