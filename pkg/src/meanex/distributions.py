"""Distribution registry: the standard families used by the reference
curves, plus the generalized hyperbolic and generalized inverse Gaussian
adapters, behind one text format.

Text format: ``family(name=value,...)``, e.g. ``gpd(xi=0.25,beta=1)`` or
``gh(lambda=-0.5,alpha=7.6,beta=-1.24,delta=0.052,mu=0.0103)``.

Survival conventions (several sources name parameters without fixing a
CDF; these are the conventions implemented here):

    gpd(xi, beta)           F_bar(x) = (1 + xi x / beta)^(-1/xi), exponential at xi=0
    pareto(alpha, lambda)   F_bar(x) = (lambda / (lambda + x))^alpha
    exponential(lambda)     F_bar(x) = exp(-lambda x)
    weibull(beta, tau)      F_bar(x) = exp(-beta x^tau)
    burr(alpha, lambda, tau) F_bar(x) = (lambda / (lambda + x^tau))^alpha
    gompertz(alpha, lambda) F_bar(x) = exp(-(alpha/lambda)(e^(lambda x) - 1))
    gamma(alpha, beta)      shape alpha, rate beta
    beta(a, b)              standard Beta on (0, 1)
    lognormal(mu, sigma)    log X ~ N(mu, sigma^2)
    normal(mu, sigma)
    laplace(mu, sigma, tau) asymmetric Laplace, tau the asymmetry (tau=1 symmetric)
    student(nu, mu)         t with nu degrees of freedom shifted by mu
    cauchy(mu, delta)
    gh(lambda, alpha, beta, delta, mu)
    gig(lambda, chi, psi)
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate, stats


def _quiet_quad(f, a, b, **kw):
    # quad's roundoff chatter is expected on spiky densities; results
    # are clamped and cross-checked, the warning adds nothing
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        return integrate.quad(f, a, b, **kw)

from .errors import DomainError, InputError, NumericError
from .gh import GhParams, gh_mean, gh_pdf, gh_sample, gh_variance
from .gig import gig_moment, gig_pdf, gig_sample

__all__ = [
    "DistributionSpec",
    "parse_distribution_spec",
    "format_distribution_spec",
    "std_sample",
    "std_cdf",
    "std_survival",
    "std_pdf",
    "dist_support",
    "dist_mean",
    "dist_mean_abs",
    "dist_isf",
    "dist_ppf",
    "fdelta_check",
    "FAMILIES",
]


@dataclass(frozen=True)
class DistributionSpec:
    family: str
    params: tuple[tuple[str, float], ...]

    def value(self, name: str) -> float:
        for key, val in self.params:
            if key == name:
                return val
        raise KeyError(name)

    def as_dict(self) -> dict[str, float]:
        return dict(self.params)


def _positive(name):
    def check(v, fam):
        if not v > 0:
            raise DomainError(f"{fam} parameter {name} must be positive, got {v:g}")
    return check


def _real(name):
    def check(v, fam):
        if not np.isfinite(v):
            raise DomainError(f"{fam} parameter {name} must be finite")
    return check


def _nonneg(name):
    def check(v, fam):
        if not v >= 0:
            raise DomainError(f"{fam} parameter {name} must be nonnegative, got {v:g}")
    return check


# family -> ordered (param, validator) signature
FAMILIES: dict[str, tuple[tuple[str, object], ...]] = {
    "gpd": (("xi", _real("xi")), ("beta", _positive("beta"))),
    "pareto": (("alpha", _positive("alpha")), ("lambda", _positive("lambda"))),
    "exponential": (("lambda", _positive("lambda")),),
    "weibull": (("beta", _positive("beta")), ("tau", _positive("tau"))),
    "burr": (("alpha", _positive("alpha")), ("lambda", _positive("lambda")), ("tau", _positive("tau"))),
    "gompertz": (("alpha", _positive("alpha")), ("lambda", _positive("lambda"))),
    "gamma": (("alpha", _positive("alpha")), ("beta", _positive("beta"))),
    "beta": (("a", _positive("a")), ("b", _positive("b"))),
    "lognormal": (("mu", _real("mu")), ("sigma", _positive("sigma"))),
    "normal": (("mu", _real("mu")), ("sigma", _positive("sigma"))),
    "laplace": (("mu", _real("mu")), ("sigma", _positive("sigma")), ("tau", _positive("tau"))),
    "student": (("nu", _positive("nu")), ("mu", _real("mu"))),
    "cauchy": (("mu", _real("mu")), ("delta", _positive("delta"))),
    "gh": (
        ("lambda", _real("lambda")),
        ("alpha", _nonneg("alpha")),
        ("beta", _real("beta")),
        ("delta", _nonneg("delta")),
        ("mu", _real("mu")),
    ),
    "gig": (("lambda", _real("lambda")), ("chi", _nonneg("chi")), ("psi", _nonneg("psi"))),
}

_ALIASES = {"exp": "exponential", "studentt": "student", "t": "student", "lognorm": "lognormal", "gauss": "normal"}

_SPEC_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*\(\s*(.*?)\s*\)\s*$", re.S)


def make_spec(family: str, **params: float) -> DistributionSpec:
    """Build and validate a spec from keyword parameters."""
    fam = _ALIASES.get(family.lower(), family.lower())
    if fam not in FAMILIES:
        raise InputError(f"unknown distribution family '{family}'")
    sig = FAMILIES[fam]
    names = [n for n, _ in sig]
    missing = [n for n in names if n not in params]
    extra = [n for n in params if n not in names]
    if missing:
        raise InputError(f"{fam} missing parameter(s): {', '.join(missing)}")
    if extra:
        raise InputError(f"{fam} does not take parameter(s): {', '.join(extra)}")
    ordered = []
    for name, check in sig:
        val = float(params[name])
        check(val, fam)
        ordered.append((name, val))
    return DistributionSpec(family=fam, params=tuple(ordered))


def parse_distribution_spec(text: str) -> DistributionSpec:
    """Parse ``family(name=value,...)``; errors name the offending token."""
    m = _SPEC_RE.match(text)
    if not m:
        raise InputError(f"cannot parse distribution spec '{text}': expected family(name=value,...)")
    family, body = m.group(1), m.group(2)
    params: dict[str, float] = {}
    if body.strip():
        for token in body.split(","):
            token = token.strip()
            if not token:
                raise InputError(f"empty parameter token in '{text}'")
            if "=" not in token:
                raise InputError(f"bad parameter token '{token}': expected name=value")
            name, _, raw = token.partition("=")
            name = name.strip().lower()
            try:
                val = float(raw.strip())
            except ValueError:
                raise InputError(f"bad numeric value in token '{token}'") from None
            if name in params:
                raise InputError(f"duplicate parameter '{name}' in '{text}'")
            params[name] = val
    return make_spec(family, **params)


def format_distribution_spec(spec: DistributionSpec) -> str:
    body = ",".join(f"{name}={val:.12g}" for name, val in spec.params)
    return f"{spec.family}({body})"


# ---------------------------------------------------------------------------
# frozen adapters


class _GhAdapter:
    """Quadrature-backed CDF/quantile layer over the GH density."""

    def __init__(self, params: GhParams):
        self.params = params
        self._sf_cache: dict[float, float] = {}
        try:
            var = gh_variance(params)
            self._scale = math.sqrt(var) if np.isfinite(var) and var > 0 else max(params.delta, 1.0)
        except DomainError:
            self._scale = max(params.delta, 1.0)

    def pdf(self, x):
        return gh_pdf(self.params, x)

    def _sf_scalar(self, x: float) -> float:
        x = float(x)
        if x in self._sf_cache:
            return self._sf_cache[x]
        mu = self.params.mu
        f = lambda t: gh_pdf(self.params, t)
        if x >= mu:
            val, _ = _quiet_quad(f, x, np.inf, limit=300)
        else:
            left, _ = _quiet_quad(f, -np.inf, x, limit=300)
            val = 1.0 - left
        val = min(max(val, 0.0), 1.0)
        self._sf_cache[x] = val
        return val

    def sf(self, x):
        arr = np.asarray(x, dtype=float)
        flat = np.atleast_1d(arr).ravel()
        if flat.size <= 2:
            out = np.array([self._sf_scalar(v) for v in flat])
        else:
            # one tail quad at the top, then short segment quads downward;
            # the running sum is monotone by construction
            order = np.argsort(flat, kind="stable")
            xs = flat[order]
            vals = np.empty_like(xs)
            f = lambda t: gh_pdf(self.params, t)
            acc = self._sf_scalar(xs[-1])
            vals[-1] = acc
            for i in range(xs.size - 2, -1, -1):
                if xs[i] != xs[i + 1]:
                    seg, _ = _quiet_quad(f, xs[i], xs[i + 1], limit=200)
                    acc = min(acc + seg, 1.0)
                vals[i] = acc
            out = np.empty_like(xs)
            out[order] = vals
        out = np.clip(out, 0.0, 1.0)
        return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)

    def cdf(self, x):
        arr = np.asarray(x, dtype=float)
        out = 1.0 - self.sf(arr)
        return out

    def isf(self, q: float) -> float:
        return _bracket_isf(self.sf, q, anchor=self.params.mu, scale=self._scale)

    def ppf(self, q: float) -> float:
        return _bracket_isf(self.sf, 1.0 - q, anchor=self.params.mu, scale=self._scale)

    def rvs(self, size, random_state):
        return gh_sample(self.params, random_state, size)

    def mean(self):
        return gh_mean(self.params)

    def support(self):
        return (-np.inf, np.inf)


class _GigAdapter:
    def __init__(self, lam: float, chi: float, psi: float):
        self.lam, self.chi, self.psi = lam, chi, psi
        m1 = gig_moment(lam, chi, psi, 1)
        self._scale = m1

    def pdf(self, x):
        return gig_pdf(self.lam, self.chi, self.psi, x)

    def cdf(self, x):
        arr = np.asarray(x, dtype=float)
        flat = np.atleast_1d(arr).ravel()
        f = lambda t: gig_pdf(self.lam, self.chi, self.psi, t)
        order = np.argsort(flat, kind="stable")
        xs = flat[order]
        vals = np.empty_like(xs)
        # accumulate forward from the support edge over sorted segments
        acc = 0.0
        prev = 0.0
        for i, v in enumerate(xs):
            if v > prev:
                seg, _ = _quiet_quad(f, prev, v, limit=300)
                acc = min(acc + seg, 1.0)
                prev = v
            vals[i] = acc if v > 0 else 0.0
        out = np.empty_like(xs)
        out[order] = vals
        out = np.clip(out, 0.0, 1.0)
        return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)

    def sf(self, x):
        return 1.0 - self.cdf(x)

    def isf(self, q: float) -> float:
        return _bracket_isf(self.sf, q, anchor=self._scale, scale=self._scale, lo_bound=0.0)

    def ppf(self, q: float) -> float:
        return _bracket_isf(self.sf, 1.0 - q, anchor=self._scale, scale=self._scale, lo_bound=0.0)

    def rvs(self, size, random_state):
        return gig_sample(self.lam, self.chi, self.psi, random_state, size)

    def mean(self):
        return gig_moment(self.lam, self.chi, self.psi, 1)

    def support(self):
        return (0.0, np.inf)


def _bracket_isf(sf, q: float, anchor: float, scale: float, lo_bound: float | None = None):
    """Inverse survival by expanding bracket + bisection on a monotone sf."""
    from scipy import optimize

    if not (0.0 < q < 1.0):
        raise DomainError("quantile level must be in (0, 1)")
    lo, hi = anchor - scale, anchor + scale
    if lo_bound is not None:
        lo = max(lo, lo_bound + 1e-300)
    width = 2.0 * scale
    for _ in range(200):
        if sf(hi) <= q:
            break
        hi += width
        width *= 2.0
    else:
        raise NumericError("quantile bracket search failed on the right")
    width = 2.0 * scale
    for _ in range(200):
        if sf(lo) >= q:
            break
        lo -= width
        width *= 2.0
        if lo_bound is not None and lo <= lo_bound:
            lo = lo_bound + 1e-300
            break
    return optimize.brentq(lambda x: sf(x) - q, lo, hi, xtol=1e-12 * max(1.0, abs(anchor)), rtol=8.9e-16)


@lru_cache(maxsize=256)
def _frozen(spec: DistributionSpec):
    p = spec.as_dict()
    fam = spec.family
    if fam == "gpd":
        return stats.genpareto(c=p["xi"], scale=p["beta"])
    if fam == "pareto":
        return stats.lomax(c=p["alpha"], scale=p["lambda"])
    if fam == "exponential":
        return stats.expon(scale=1.0 / p["lambda"])
    if fam == "weibull":
        return stats.weibull_min(c=p["tau"], scale=p["beta"] ** (-1.0 / p["tau"]))
    if fam == "burr":
        return stats.burr12(c=p["tau"], d=p["alpha"], scale=p["lambda"] ** (1.0 / p["tau"]))
    if fam == "gompertz":
        return stats.gompertz(c=p["alpha"] / p["lambda"], scale=1.0 / p["lambda"])
    if fam == "gamma":
        return stats.gamma(a=p["alpha"], scale=1.0 / p["beta"])
    if fam == "beta":
        return stats.beta(a=p["a"], b=p["b"])
    if fam == "lognormal":
        return stats.lognorm(s=p["sigma"], scale=math.exp(p["mu"]))
    if fam == "normal":
        return stats.norm(loc=p["mu"], scale=p["sigma"])
    if fam == "laplace":
        return stats.laplace_asymmetric(kappa=p["tau"], loc=p["mu"], scale=p["sigma"])
    if fam == "student":
        return stats.t(df=p["nu"], loc=p["mu"])
    if fam == "cauchy":
        return stats.cauchy(loc=p["mu"], scale=p["delta"])
    if fam == "gh":
        return _GhAdapter(GhParams(lam=p["lambda"], alpha=p["alpha"], beta=p["beta"], delta=p["delta"], mu=p["mu"]))
    if fam == "gig":
        return _GigAdapter(p["lambda"], p["chi"], p["psi"])
    raise InputError(f"unknown family '{fam}'")


def std_sample(dist: DistributionSpec, rng: np.random.Generator, n: int) -> np.ndarray:
    """n independent draws, in draw order."""
    if n < 0:
        raise DomainError("sample size must be nonnegative")
    return np.asarray(_frozen(dist).rvs(size=n, random_state=rng), dtype=float)


def std_cdf(dist: DistributionSpec, x):
    return _frozen(dist).cdf(x)


def std_survival(dist: DistributionSpec, x):
    """1 - F computed by the stable direct formula where available."""
    return _frozen(dist).sf(x)


def std_pdf(dist: DistributionSpec, x):
    return _frozen(dist).pdf(x)


def dist_support(dist: DistributionSpec) -> tuple[float, float]:
    s = _frozen(dist).support()
    return float(s[0]), float(s[1])


def dist_mean(dist: DistributionSpec) -> float:
    m = float(_frozen(dist).mean())
    if not np.isfinite(m):
        raise DomainError(f"{dist.family} has no finite mean at these parameters")
    return m


def dist_isf(dist: DistributionSpec, q: float) -> float:
    return float(_frozen(dist).isf(q))


def dist_ppf(dist: DistributionSpec, q: float) -> float:
    return float(_frozen(dist).ppf(q))


def dist_mean_abs(dist: DistributionSpec) -> float:
    """E|X| = int_0^inf [F_bar(t) + F(-t)] dt, closed mean when the
    support is nonnegative."""
    frozen = _frozen(dist)
    lo, _ = dist_support(dist)
    if lo >= 0.0:
        return dist_mean(dist)
    dist_mean(dist)  # rejects undefined-mean families up front
    upper = max(abs(float(frozen.isf(1e-13))), abs(float(frozen.ppf(1e-13))), 1.0)
    val, err = _quiet_quad(lambda t: frozen.sf(t) + frozen.cdf(-t), 0.0, upper, limit=400, epsabs=1e-10)
    if not np.isfinite(val):
        raise NumericError("E|X| quadrature failed")
    return float(val)


def fdelta_check(dist: DistributionSpec, u0: float, u1: float, deltas) -> np.ndarray:
    """Smoothness diagnostic for the uniform band's CDF-increment condition.

    For each delta: sup over a 512-point v-grid in [u0, u1] of
    ((F(v) - F(v - delta))^2 / delta). Decay toward 0 as delta -> 0
    signals an absolutely continuous F on the interval; a jump shows up
    as 1/delta divergence (reported, not errored).
    """
    deltas = np.asarray(deltas, dtype=float)
    if deltas.size == 0 or np.any(deltas <= 0):
        raise DomainError("deltas must be positive")
    if deltas.size > 1 and not np.all(np.diff(deltas) < 0):
        raise DomainError("deltas must be strictly decreasing")
    if not u0 < u1:
        raise DomainError("fdelta_check requires u0 < u1")
    lo, hi = dist_support(dist)
    if u1 >= hi:
        raise DomainError("fdelta_check requires u1 below the right endpoint of the support")
    v = np.linspace(u0, u1, 512)
    fv = np.asarray(std_cdf(dist, v), dtype=float)
    out = np.empty(deltas.size)
    for i, d in enumerate(deltas):
        fvd = np.asarray(std_cdf(dist, v - d), dtype=float)
        out[i] = float(np.max((fv - fvd) ** 2 / d))
    return out
