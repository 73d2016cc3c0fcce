"""Monte Carlo harness: replicated mean-excess averaging, band coverage
and convergence experiments, and an exactly checkable fourth-moment
identity.

Determinism contract
--------------------
Every replicate r draws from default_rng(SeedSequence(entropy=seed,
spawn_key=(r,))), so replicate streams are independent of how work is
scheduled. Accumulation is chunked: replicates are grouped into fixed
blocks of 64, each block reduced on its own, block partials combined in
block order. The same tree shape is used serially and under
MEANEX_THREADS > 1 workers, so results are bitwise identical either way.

The fourth-moment identity: for iid centered X_1..X_n with kappa1 =
E X^2 and kappa2 = E X^4,

    E (X_1 + ... + X_n)^4 = n*kappa2 + 3*n*(n-1)*kappa1^2,

which pairs with a brute-force enumeration oracle over small discrete
supports for validation at machine precision.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .distributions import (
    DistributionSpec,
    dist_isf,
    dist_mean_abs,
    dist_ppf,
    dist_support,
    std_sample,
    std_survival,
)
from .errors import DomainError, InputError
from .mef import (
    consistency_band,
    empirical_mef_curve,
    sup_deviation,
    theoretical_mef_curve,
)
from .types import BandConstants, Grid, MefCurve, make_curve, make_grid, make_sample

__all__ = [
    "StallionCurve",
    "ExperimentReport",
    "stallion",
    "coverage_experiment",
    "convergence_experiment",
    "fourth_moment_identity",
    "fourth_moment_oracle",
]

_CHUNK = 64  # replicates per reduction block; fixed so that worker
             # count never changes the summation tree


@dataclass(frozen=True)
class StallionCurve:
    """Pointwise average of empirical mean-excess curves over replicates.

    contributors[i] counts the replicates whose curve was defined at
    grid point i (NaN points are skipped, not zero-filled).
    """

    curve: MefCurve
    contributors: np.ndarray
    n_reps: int
    sample_size: int
    seed: int
    dist: DistributionSpec


@dataclass(frozen=True)
class ExperimentReport:
    """Named metric block from one experiment run."""

    name: str
    metrics: tuple
    replicate_count: int
    seed: int


def _replicate_rng(seed: int, r: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(r,)))


def _stallion_chunk(args):
    dist, points, seed, size, start, count = args
    grid = make_grid(points)
    sums = np.zeros(points.size)
    cnts = np.zeros(points.size, dtype=np.int64)
    for r in range(start, start + count):
        x = std_sample(dist, _replicate_rng(seed, r), size)
        curve = empirical_mef_curve(make_sample(x), grid)
        ok = np.isfinite(curve.values)
        sums[ok] += curve.values[ok]
        cnts[ok] += 1
    return start, sums, cnts


def _thread_count() -> int:
    raw = os.environ.get("MEANEX_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        raise InputError(f"MEANEX_THREADS must be an integer, got {raw!r}")
    return max(1, k)


def stallion(dist: DistributionSpec, n_reps: int, sample_size: int, grid: Grid, seed: int) -> StallionCurve:
    """Average the empirical mean-excess curve over n_reps independent
    samples of sample_size draws each."""
    if n_reps < 1 or sample_size < 1:
        raise InputError("stallion requires n_reps >= 1 and sample_size >= 1")
    lo, hi = dist_support(dist)
    points = grid.points
    if points[0] < lo or points[-1] >= hi:
        raise DomainError("grid outside support")
    chunks = [
        (dist, points, seed, sample_size, start, min(_CHUNK, n_reps - start))
        for start in range(0, n_reps, _CHUNK)
    ]
    workers = _thread_count()
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_stallion_chunk, chunks))
        parts.sort(key=lambda t: t[0])
    else:
        parts = [_stallion_chunk(c) for c in chunks]
    sums = np.zeros(points.size)
    cnts = np.zeros(points.size, dtype=np.int64)
    for _, s, c in parts:  # combined in block order regardless of scheduling
        sums += s
        cnts += c
    with np.errstate(invalid="ignore"):
        avg = np.where(cnts > 0, sums / np.maximum(cnts, 1), np.nan)
    curve = make_curve(grid, avg, meta=f"stallion reps={n_reps} size={sample_size} seed={seed}")
    cnts.flags.writeable = False
    return StallionCurve(
        curve=curve, contributors=cnts, n_reps=n_reps,
        sample_size=sample_size, seed=seed, dist=dist,
    )


def coverage_experiment(
    dist: DistributionSpec,
    u0: float,
    u1: float,
    constants: BandConstants,
    sample_size: int,
    n_reps: int,
    seed: int,
    eps: float = 0.05,
    oracle: bool = True,
) -> ExperimentReport:
    """Fraction of replicates whose uniform band contains the true mean
    excess function at every point of a 101-point grid on [u0, u1].

    eps is the nominal miss level carried into the report (the band
    aims at coverage 1 - eps); it does not alter the band itself.
    oracle=True feeds the band the exact survival at u1 and E|X|;
    oracle=False uses the plug-in estimates. A replicate whose band is
    undefined (too few exceedances) counts as not covered.
    """
    if n_reps < 1 or sample_size < 1:
        raise InputError("coverage requires n_reps >= 1 and sample_size >= 1")
    if not (0.0 <= eps < 1.0):
        raise InputError("eps must lie in [0, 1)")
    if (u0, u1) != (constants.u0, constants.u1):
        raise InputError("constants were built for a different [u0, u1]")
    grid = make_grid(np.linspace(u0, u1, 101))
    truth = theoretical_mef_curve(dist, grid).values
    sf_u1 = float(std_survival(dist, u1)) if oracle else None
    mabs = dist_mean_abs(dist) if oracle else None
    if oracle and sf_u1 - constants.D1 / np.sqrt(sample_size) <= 0:
        raise DomainError("band undefined: n too small for interval")
    covered = 0
    en_sum = 0.0
    hw_sum = 0.0
    defined = 0
    for r in range(n_reps):
        x = std_sample(dist, _replicate_rng(seed, r), sample_size)
        sample = make_sample(x)
        try:
            band = consistency_band(sample, grid, constants, survival_u1=sf_u1, mean_abs=mabs)
        except DomainError:
            continue
        defined += 1
        en_sum += band.en
        hw_sum += band.half_width
        inside = (band.lower <= truth) & (truth <= band.upper)
        if bool(np.all(inside)):  # NaN comparisons are False: undefined => uncovered
            covered += 1
    metrics = (
        ("coverage", covered / n_reps),
        ("mean_en", en_sum / defined if defined else float("nan")),
        ("mean_half_width", hw_sum / defined if defined else float("nan")),
        ("defined_fraction", defined / n_reps),
        ("eps", eps),
        ("size", float(sample_size)),
    )
    return ExperimentReport(name="coverage", metrics=metrics, replicate_count=n_reps, seed=seed)


def convergence_experiment(
    dist: DistributionSpec,
    u1: float,
    sizes,
    n_reps: int,
    seed: int,
    u0: float | None = None,
) -> ExperimentReport:
    """Median sup deviation between the empirical and true mean excess
    over a fixed 101-point window ending at u1, per sample size.

    The window starts at the support low end when finite, else at the
    0.1% quantile.
    """
    sizes = [int(s) for s in sizes]
    if len(sizes) < 1 or any(s < 2 for s in sizes):
        raise InputError("convergence requires sizes of at least 2 observations")
    if sorted(sizes) != sizes or len(set(sizes)) != len(sizes):
        raise InputError("sizes must be strictly increasing")
    lo_support, _ = dist_support(dist)
    if u0 is None:
        u0 = lo_support if np.isfinite(lo_support) else dist_ppf(dist, 0.001)
    if not u0 < u1:
        raise InputError("convergence window is empty")
    grid = make_grid(np.linspace(u0, u1, 101))
    truth = theoretical_mef_curve(dist, grid)
    metrics = []
    for i, size in enumerate(sizes):
        devs = np.empty(n_reps)
        for r in range(n_reps):
            rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(i, r)))
            sample = make_sample(std_sample(dist, rng, size))
            emp = empirical_mef_curve(sample, grid)
            devs[r] = sup_deviation(emp, truth)
        metrics.append((f"median_sup_dev_{size}", float(np.median(devs))))
    return ExperimentReport(name="convergence", metrics=tuple(metrics), replicate_count=n_reps, seed=seed)


def fourth_moment_identity(kappa1: float, kappa2: float, n: int) -> float:
    """E (X_1+...+X_n)^4 for iid centered X with E X^2 = kappa1 and
    E X^4 = kappa2."""
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    if kappa1 < 0 or kappa2 < 0:
        raise DomainError("inconsistent moments: moments of even order are nonnegative")
    if kappa2 < kappa1 ** 2:
        raise DomainError("inconsistent moments: E X^4 < (E X^2)^2 violates Jensen")
    if kappa1 == 0 and kappa2 != 0:
        raise DomainError("inconsistent moments: zero variance forces zero fourth moment")
    n = int(n)
    return n * kappa2 + 3.0 * n * (n - 1) * kappa1 ** 2


_ORACLE_BUDGET = 2_000_000


def fourth_moment_oracle(pairs, n: int) -> float:
    """Exact E (X_1+...+X_n)^4 for iid discrete X given as (value,
    probability) pairs, by full enumeration of the n-fold product space.
    Values are centered internally; small cases only."""
    pairs = list(pairs)
    if not pairs:
        raise DomainError("support must be nonempty")
    support = np.array([float(v) for v, _ in pairs])
    probs = np.array([float(p) for _, p in pairs])
    if np.any(probs < 0) or abs(probs.sum() - 1.0) > 1e-12:
        raise DomainError("probabilities must be nonnegative and sum to 1")
    if int(n) != n or n < 1 or n > 8:
        raise DomainError("oracle enumerates n between 1 and 8 only")
    n = int(n)
    if support.size ** n > _ORACLE_BUDGET:
        raise DomainError("oracle enumeration budget exceeded")
    support = support - float(np.dot(support, probs))
    total = 0.0
    idx = range(support.size)
    for combo in itertools.product(idx, repeat=n):
        s = 0.0
        p = 1.0
        for i in combo:
            s += support[i]
            p *= probs[i]
        total += p * s ** 4
    return total
