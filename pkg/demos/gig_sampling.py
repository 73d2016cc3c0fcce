"""
Sampling the generalized inverse Gaussian by ratio of uniforms
==============================================================

"""

# the GIG is the mixing law behind the GH family; its density is
# x^(lam-1) exp(-(chi/x + psi x)/2) up to a Bessel normalizer
import numpy as np
from meanex import gig_moment, gig_pdf, gig_sample, gig_validate

lam, chi, psi = 1.0, 1.0, 1.0
print("parameter class:", gig_validate(lam, chi, psi))

# exact moments come from a ratio of Bessel functions
m1 = gig_moment(lam, chi, psi, 1)
m2 = gig_moment(lam, chi, psi, 2)
print("E[W]  =", m1)
print("E[W2] =", m2)

# a million draws land on those moments to Monte Carlo accuracy
rng = np.random.default_rng(0)
w = gig_sample(lam, chi, psi, rng, 10**6)
print("mean of draws  =", float(np.mean(w)))
print("mean of squares=", float(np.mean(w * w)))

# histogram of draws against the density
edges = np.linspace(0.0, 8.0, 81)
counts, _ = np.histogram(w, bins=edges, density=True)
centers = 0.5 * (edges[:-1] + edges[1:])

from meanex import svg_plot, line_series, PlotSpec, write_text

series = [
    line_series("histogram", centers, counts),
    line_series("density", centers, gig_pdf(lam, chi, psi, centers)),
]
svg = svg_plot(series, PlotSpec(title="GIG draws vs density", xlabel="w", ylabel="pdf"))
write_text("demos/gig_sampling.svg", svg)
print("wrote demos/gig_sampling.svg")
