"""Tests for OLS line fitting, GPD parameter inversion, the GPD mean
excess form, and the tail classifier."""

import numpy as np
import pytest

from meanex import (
    DomainError,
    GpdParams,
    classify_tail,
    fit_gpd_curve,
    gpd_from_ols,
    gpd_mef,
    make_curve,
    make_grid,
    ols_fit,
)


# ---------------------------------------------------------------------------
# ols_fit


def test_ols_exact_line():
    fit = ols_fit([0.0, 1.0, 2.0], [1.0, 2.0, 3.0])
    assert fit.a_hat == pytest.approx(1.0, abs=1e-12)
    assert fit.b_hat == pytest.approx(1.0, abs=1e-12)
    assert fit.r2 == pytest.approx(1.0, abs=1e-12)
    assert fit.n_points == 3


def test_ols_flat_line():
    fit = ols_fit([0.0, 1.0], [5.0, 5.0])
    assert fit.a_hat == pytest.approx(0.0, abs=1e-12)
    assert fit.b_hat == pytest.approx(5.0, abs=1e-12)


def test_ols_tent_shape():
    fit = ols_fit([0.0, 1.0, 2.0], [0.0, 1.0, 0.0])
    assert fit.a_hat == pytest.approx(0.0, abs=1e-12)
    assert fit.b_hat == pytest.approx(1.0 / 3.0, abs=1e-12)
    assert 0.0 <= fit.r2 <= 1.0


def test_ols_drops_nan_pairs():
    fit = ols_fit([0.0, 1.0, 2.0, 3.0], [1.0, float("nan"), 3.0, 4.0])
    assert fit.n_points == 3
    assert fit.a_hat == pytest.approx(1.0, abs=1e-12)


def test_ols_singular_design():
    with pytest.raises(DomainError, match="singular design"):
        ols_fit([2.0, 2.0, 2.0], [1.0, 2.0, 3.0])


def test_ols_too_few_points():
    with pytest.raises(DomainError):
        ols_fit([1.0], [2.0])
    with pytest.raises(DomainError):
        ols_fit([1.0, float("nan")], [2.0, 3.0])


def test_ols_r2_affine_invariance():
    rng = np.random.default_rng(3)
    x = rng.uniform(0, 10, 40)
    y = 2.0 * x + 1.0 + rng.normal(0, 1.0, 40)
    base = ols_fit(x, y).r2
    moved = ols_fit(3.0 * x - 7.0, -0.5 * y + 11.0).r2
    assert moved == pytest.approx(base, abs=1e-12)


# ---------------------------------------------------------------------------
# gpd_from_ols


def test_gpd_inversion_heavy():
    fit = ols_fit([0.0, 1.0], [4.0 / 3.0, 4.0 / 3.0 + 1.0 / 3.0])
    params = gpd_from_ols(fit)
    assert params.xi == pytest.approx(0.25, abs=1e-12)
    assert params.beta == pytest.approx(1.0, abs=1e-12)


def test_gpd_inversion_exponential_boundary():
    fit = ols_fit([0.0, 1.0], [2.0, 2.0])
    params = gpd_from_ols(fit)
    assert params.xi == pytest.approx(0.0, abs=1e-12)
    assert params.beta == pytest.approx(2.0, abs=1e-12)


def test_gpd_inversion_light():
    fit = ols_fit([0.0, 1.0], [1.0, 0.5])
    params = gpd_from_ols(fit)
    assert params.xi == pytest.approx(-1.0, abs=1e-12)
    assert params.beta == pytest.approx(2.0, abs=1e-12)


def test_gpd_inversion_degenerate_slope():
    fit = ols_fit([0.0, 1.0], [2.0, 1.0])  # slope exactly -1
    with pytest.raises(DomainError, match="degenerate slope"):
        gpd_from_ols(fit)


def test_gpd_inversion_slope_below_minus_one():
    fit = ols_fit([0.0, 1.0], [3.0, 1.0])  # slope -2
    with pytest.raises(DomainError, match="invalid shape"):
        gpd_from_ols(fit)


def test_gpd_inversion_nonpositive_scale():
    fit = ols_fit([0.0, 1.0], [-1.0, -0.5])  # intercept < 0, slope 0.5
    with pytest.raises(DomainError, match="invalid scale"):
        gpd_from_ols(fit)


# ---------------------------------------------------------------------------
# gpd_mef


def test_gpd_mef_values():
    assert gpd_mef(GpdParams(0.25, 1.0), 3.0) == pytest.approx(7.0 / 3.0, abs=1e-12)
    assert gpd_mef(GpdParams(0.0, 2.0), 5.0) == pytest.approx(2.0, abs=1e-12)
    assert gpd_mef(GpdParams(-0.75, 1.0), 1.0) == pytest.approx(1.0 / 7.0, abs=1e-12)


def test_gpd_mef_requires_xi_below_one():
    with pytest.raises(DomainError):
        gpd_mef(GpdParams(1.0, 1.0), 0.0)


def test_gpd_mef_zero_beyond_right_endpoint():
    # xi < 0 has bounded support ending at beta/|xi|
    params = GpdParams(-0.5, 1.0)
    assert gpd_mef(params, 2.0) == 0.0
    assert gpd_mef(params, 5.0) == 0.0


def test_gpd_mef_vectorized():
    out = gpd_mef(GpdParams(0.0, 2.0), [0.0, 1.0, 2.0])
    assert np.asarray(out).tolist() == [2.0, 2.0, 2.0]


def test_gpd_params_validation():
    with pytest.raises(DomainError, match="invalid scale"):
        GpdParams(0.25, 0.0)
    with pytest.raises(DomainError):
        GpdParams(float("nan"), 1.0)


@pytest.mark.parametrize("xi", [-0.75, 0.0, 0.25, 0.5])
def test_fit_round_trip(xi):
    # mef of a GPD is a line; fitting it recovers the parameters
    beta = 1.3
    params = GpdParams(xi, beta)
    hi = 0.9 * beta / abs(xi) if xi < 0 else 5.0
    grid = np.linspace(0.0, hi, 30)
    y = gpd_mef(params, grid)
    back = gpd_from_ols(ols_fit(grid, y))
    assert back.xi == pytest.approx(xi, abs=1e-10)
    assert back.beta == pytest.approx(beta, abs=1e-10)


# ---------------------------------------------------------------------------
# classify_tail


def _curve_from(params, lo, hi, m=25):
    g = make_grid(np.linspace(lo, hi, m))
    return make_curve(g, gpd_mef(params, g.points))


def test_classify_heavy():
    curve = _curve_from(GpdParams(0.25, 1.0), 0.0, 5.0)
    assert classify_tail(curve) == "heavy"


def test_classify_medium():
    g = make_grid(np.linspace(0.0, 5.0, 25))
    curve = make_curve(g, np.full(25, 2.0))
    assert classify_tail(curve) == "medium"


def test_classify_light():
    curve = _curve_from(GpdParams(-0.75, 1.0), 0.0, 1.2)
    assert classify_tail(curve) == "light"


def test_classify_rescale_invariance():
    # threshold is relative, so stretching both axes changes nothing
    base = _curve_from(GpdParams(0.25, 1.0), 0.0, 5.0)
    g2 = make_grid(base.grid.points * 100.0)
    scaled = make_curve(g2, base.values * 100.0)
    assert classify_tail(scaled) == classify_tail(base)


def test_classify_needs_three_defined_points():
    g = make_grid(np.linspace(0.0, 1.0, 10))
    vals = np.full(10, float("nan"))
    vals[4] = 1.0
    vals[5] = 1.1
    curve = make_curve(g, vals)
    with pytest.raises(DomainError):
        classify_tail(curve)


# ---------------------------------------------------------------------------
# fit_gpd_curve


def test_fit_gpd_curve_recovers_line():
    params = GpdParams(0.25, 1.0)
    curve = _curve_from(params, 0.0, 5.0, m=60)
    fitted, fit = fit_gpd_curve(curve)
    assert fitted.xi == pytest.approx(0.25, abs=1e-9)
    assert fitted.beta == pytest.approx(1.0, abs=1e-9)
    assert fit.r2 == pytest.approx(1.0, abs=1e-12)


def test_fit_gpd_curve_uses_central_window():
    # corrupt the extreme 10 percent on each side; the window ignores it
    params = GpdParams(0.25, 1.0)
    g = make_grid(np.linspace(0.0, 5.0, 50))
    y = gpd_mef(params, g.points)
    y[:3] = 40.0
    y[-3:] = 40.0
    fitted, _ = fit_gpd_curve(make_curve(g, y))
    assert fitted.xi == pytest.approx(0.25, abs=1e-9)
