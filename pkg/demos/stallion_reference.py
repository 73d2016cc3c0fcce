"""
Stallion curves: an averaged reference for eyeballing fit
=========================================================

"""

# averaging many replicate emefs of a known law gives a smooth template;
# overlay a data emef on the template to judge the tail by eye
import numpy as np
from meanex import (
    make_grid, make_sample, parse_distribution_spec, stallion,
    empirical_mef_curve, std_sample,
)

grid = make_grid(np.linspace(0.1, 1.5, 120))

# reference: exponential(2) has constant mean excess 1/2
ref_spec = parse_distribution_spec("exponential(lambda=2)")
ref = stallion(ref_spec, n_reps=200, sample_size=2000, grid=grid, seed=11)
print("reference level ~", float(np.nanmean(ref.curve.values)))

# pretend data: one ordinary exponential(2) sample of the same size
data = make_sample(std_sample(ref_spec, np.random.default_rng(5), 2000))
emp = empirical_mef_curve(data, grid)

# and a deliberately wrong candidate: a heavier tail drifts upward
heavy_spec = parse_distribution_spec("gpd(xi=0.3,beta=0.5)")
heavy = stallion(heavy_spec, n_reps=200, sample_size=2000, grid=grid, seed=11)

from meanex import svg_plot, line_series, PlotSpec, write_text

series = [
    line_series("data emef", grid.points, emp.values),
    line_series("exponential template", grid.points, ref.curve.values),
    line_series("heavy-tail template", grid.points, heavy.curve.values),
]
svg = svg_plot(series, PlotSpec(title="One sample against two stallion templates"))
write_text("demos/stallion_reference.svg", svg)
print("wrote demos/stallion_reference.svg")
