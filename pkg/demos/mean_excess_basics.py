"""
Mean excess curves and the graphical tail test
==============================================

"""

# draw a heavy-tailed sample: GPD with shape 0.25 and scale 1
import numpy as np
from meanex import (
    make_sample, default_grid, empirical_mef_curve, theoretical_mef_curve,
    parse_distribution_spec, std_sample, fit_gpd_curve,
)

spec = parse_distribution_spec("gpd(xi=0.25,beta=1)")
rng = np.random.default_rng(0)
sample = make_sample(std_sample(spec, rng, 4000))

# the empirical mean excess: average exceedance above each threshold
grid = default_grid(sample)
emp = empirical_mef_curve(sample, grid)

# the true mean excess of the sampled law, on the same grid
theo = theoretical_mef_curve(spec, grid)

# for a GPD the mean excess is affine in u; a straight emef is the
# graphical signature of a Pareto-type tail
params, fit = fit_gpd_curve(emp)
print("slope a_hat      =", fit.a_hat)
print("intercept b_hat  =", fit.b_hat)
print("r2               =", fit.r2)
print("implied xi_hat   =", params.xi)
print("implied beta_hat =", params.beta)

# plot both curves as an SVG written next to this script
from meanex import svg_plot, line_series, PlotSpec, write_text

series = [
    line_series("empirical", grid.points, emp.values),
    line_series("true mef", grid.points, theo.values),
]
svg = svg_plot(series, PlotSpec(title="GPD mean excess: empirical vs true"))
write_text("demos/mean_excess_basics.svg", svg)
print("wrote demos/mean_excess_basics.svg")
