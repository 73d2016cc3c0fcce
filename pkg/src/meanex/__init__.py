"""meanex: mean excess function analysis.

Empirical and theoretical mean excess curves, uniform consistency bands
with explicit constants, GPD fitting from mean-excess linearity,
generalized hyperbolic and generalized inverse Gaussian distributions,
a deterministic Monte Carlo harness, and OHLCV return ingestion.
"""

from .bessel import bessel_k, bessel_k_scaled
from .distributions import (
    DistributionSpec,
    dist_isf,
    dist_mean,
    dist_mean_abs,
    dist_ppf,
    dist_support,
    fdelta_check,
    format_distribution_spec,
    make_spec,
    parse_distribution_spec,
    std_cdf,
    std_pdf,
    std_sample,
    std_survival,
)
from .errors import DomainError, InputError, MeanexError, NumericError
from .gh import GhParams, gh_mean, gh_norming, gh_pdf, gh_sample, gh_validate, gh_variance
from .gig import gig_moment, gig_pdf, gig_sample, gig_validate
from .gpdfit import (
    GpdParams,
    OlsFit,
    classify_tail,
    fit_gpd_curve,
    gpd_from_ols,
    gpd_mef,
    ols_fit,
)
from .mef import (
    asymptotic_variance,
    band_constants,
    consistency_band,
    default_grid,
    empirical_mef,
    empirical_mef_curve,
    h_u_values,
    sup_deviation,
    theoretical_mef,
    theoretical_mef_curve,
)
from .montecarlo import (
    ExperimentReport,
    StallionCurve,
    convergence_experiment,
    coverage_experiment,
    fourth_moment_identity,
    fourth_moment_oracle,
    stallion,
)
from .ohlcv import (
    OhlcvRecord,
    PriceSeries,
    log_returns,
    monthly_last,
    parse_ohlcv_csv,
    returns,
)
from .serialize import (
    band_csv,
    compare_csv,
    curve_csv,
    experiment_csv,
    fit_csv,
    ohlcv_csv,
    write_text,
)
from .svgplot import PlotSpec, band_series, line_series, svg_plot
from .types import (
    Band,
    BandConstants,
    Grid,
    MefCurve,
    Sample,
    make_curve,
    make_grid,
    make_sample,
)

__version__ = "0.1.0"
