"""Command line interface.

Subcommands wrap the library operations and emit deterministic CSV and
SVG artifacts:

    emef       empirical mean excess curve of a sample file
    band       uniform consistency band on [u0, u1]
    stallion   replicate-averaged mean excess curve of a known law
    coverage   band coverage experiment
    fit-gpd    GPD shape/scale from mean-excess linearity
    fdelta     smoothness statistic sup (F(v)-F(v-delta))^2/delta
    gh-pdf     density table of a distribution spec
    gh-sample  seeded draws from a distribution spec
    ingest     OHLCV CSV to a return series (one value per line)
    compare    data emef vs model mef overlay plus sup deviation

Exit codes: 0 success, 2 usage or input error, 3 numeric or domain
error. Sample files carry one number per line; a non-numeric first
line is tolerated as a header. Every command is deterministic given
--seed; MEANEX_THREADS>1 parallelizes the montecarlo commands without
changing their output.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .distributions import (
    dist_isf,
    dist_ppf,
    fdelta_check,
    parse_distribution_spec,
    std_pdf,
    std_sample,
)
from .errors import DomainError, InputError, NumericError
from .gpdfit import classify_tail, fit_gpd_curve
from .mef import (
    band_constants,
    consistency_band,
    default_grid,
    empirical_mef_curve,
    theoretical_mef_curve,
    sup_deviation,
)
from .montecarlo import coverage_experiment, stallion
from .ohlcv import log_returns, parse_ohlcv_csv, returns
from .serialize import band_csv, compare_csv, curve_csv, experiment_csv, fit_csv, fmt, write_text
from .svgplot import PlotSpec, band_series, line_series, svg_plot
from .types import make_grid, make_sample

__all__ = ["main", "PlotSpec"]

FULL_REPS = 6000  # full-protocol replicate count
FULL_SIZE = 4000  # full-protocol sample size


def _read_sample_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    values = []
    for i, line in enumerate(lines):
        tok = line.strip().split(",")[0].strip()
        if not tok:
            continue
        try:
            values.append(float(tok))
        except ValueError:
            if i == 0 and not values:
                continue  # header line
            raise InputError(f"{path}: line {i + 1} is not a number: {line!r}")
    if not values:
        raise InputError(f"{path}: no numeric values")
    return make_sample(values)


def _read_text_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")


def _grid_arg(raw):
    if raw is None or raw in ("order-stats", "order-statistics"):
        return "order-statistics"
    try:
        m = int(raw)
    except ValueError:
        raise InputError(f"--grid expects an integer or 'order-stats', got {raw!r}")
    if m < 1:
        raise InputError("--grid size must be positive")
    return m


def _emit(args, text, svg_builder=None):
    if args.csv:
        write_text(args.csv, text)
    else:
        sys.stdout.write(text)
    if getattr(args, "svg", None):
        if svg_builder is None:
            raise InputError("--svg is not supported for this command")
        write_text(args.svg, svg_builder())


def _plot_dims(args):
    return 900, 600


def cmd_emef(args):
    sample = _read_sample_file(args.sample)
    grid = default_grid(sample, _grid_arg(args.grid))
    curve = empirical_mef_curve(sample, grid)

    def build_svg():
        w, h = _plot_dims(args)
        spec = PlotSpec(width=w, height=h, title="empirical mean excess")
        return svg_plot([line_series("emef", grid.points, curve.values)], spec)

    _emit(args, curve_csv(curve), build_svg)
    return 0


def cmd_band(args):
    sample = _read_sample_file(args.sample)
    if args.u0 is None or args.u1 is None:
        raise InputError("band requires --u0 and --u1")
    constants = band_constants(args.u0, args.u1, A=args.A, A1=args.A1)
    g = _grid_arg(args.grid)
    if g == "order-statistics":
        pts = np.unique(sample.values)
        pts = pts[(pts >= args.u0) & (pts <= args.u1)]
        if pts.size and pts[-1] == sample.max:
            pts = pts[:-1]
        if pts.size == 0:
            raise InputError("no grid points inside [u0, u1]")
        grid = make_grid(pts)
    else:
        grid = make_grid(np.linspace(args.u0, args.u1, g))
    band = consistency_band(sample, grid, constants)

    def build_svg():
        w, h = _plot_dims(args)
        spec = PlotSpec(width=w, height=h, title="mean excess consistency band")
        series = [band_series("band", grid.points, band.lower, band.upper, band.curve.values)]
        return svg_plot(series, spec)

    _emit(args, band_csv(band), build_svg)
    return 0


def cmd_stallion(args):
    dist = parse_distribution_spec(args.dist)
    reps = FULL_REPS if args.full and args.reps is None else (args.reps or 200)
    size = FULL_SIZE if args.full and args.size is None else (args.size or 2000)
    u0 = args.u0 if args.u0 is not None else dist_ppf(dist, 0.01)
    u1 = args.u1 if args.u1 is not None else dist_isf(dist, 0.01)
    if not u0 < u1:
        raise InputError("stallion window is empty")
    g = _grid_arg(args.grid)
    m = 200 if g == "order-statistics" else g
    grid = make_grid(np.linspace(u0, u1, m))
    result = stallion(dist, n_reps=reps, sample_size=size, grid=grid, seed=args.seed)

    def build_svg():
        w, h = _plot_dims(args)
        spec = PlotSpec(width=w, height=h, title=f"stallion: {args.dist}")
        return svg_plot([line_series("stallion", grid.points, result.curve.values)], spec)

    _emit(args, curve_csv(result.curve), build_svg)
    return 0


def cmd_coverage(args):
    dist = parse_distribution_spec(args.dist)
    if args.u0 is None or args.u1 is None:
        raise InputError("coverage requires --u0 and --u1")
    reps = FULL_REPS if args.full and args.reps is None else (args.reps or 500)
    size = FULL_SIZE if args.full and args.size is None else (args.size or 4000)
    constants = band_constants(args.u0, args.u1, A=args.A, A1=args.A1)
    report = coverage_experiment(
        dist, args.u0, args.u1, constants,
        sample_size=size, n_reps=reps, seed=args.seed, eps=args.eps,
    )
    _emit(args, experiment_csv(report))
    return 0


def cmd_fit_gpd(args):
    sample = _read_sample_file(args.sample)
    grid = default_grid(sample, _grid_arg(args.grid))
    curve = empirical_mef_curve(sample, grid)
    params, fit = fit_gpd_curve(curve)
    label = classify_tail(curve)
    if args.csv:
        write_text(args.csv, fit_csv(params, fit))
    print(f"xi_hat = {fmt(params.xi)}")
    print(f"beta_hat = {fmt(params.beta)}")
    print(f"a_hat = {fmt(fit.a_hat)}")
    print(f"b_hat = {fmt(fit.b_hat)}")
    print(f"r2 = {fmt(fit.r2)}")
    print(f"tail = {label}")
    return 0


def cmd_fdelta(args):
    dist = parse_distribution_spec(args.dist)
    if args.u0 is None or args.u1 is None:
        raise InputError("fdelta requires --u0 and --u1")
    deltas = [0.1, 0.01, 0.001]
    stats = fdelta_check(dist, args.u0, args.u1, deltas)
    lines = ["delta,statistic"]
    for d, s in zip(deltas, stats):
        lines.append(f"{fmt(d)},{fmt(s)}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_gh_pdf(args):
    dist = parse_distribution_spec(args.dist)
    u0 = args.u0 if args.u0 is not None else dist_ppf(dist, 0.001)
    u1 = args.u1 if args.u1 is not None else dist_isf(dist, 0.001)
    if not u0 < u1:
        raise InputError("gh-pdf window is empty")
    g = _grid_arg(args.grid)
    m = 401 if g == "order-statistics" else g
    x = np.linspace(u0, u1, m)
    y = np.array([std_pdf(dist, xi) for xi in x])
    lines = ["x,pdf"]
    for xi, yi in zip(x, y):
        lines.append(f"{fmt(xi)},{fmt(yi)}")

    def build_svg():
        w, h = _plot_dims(args)
        spec = PlotSpec(width=w, height=h, title=args.dist, xlabel="x", ylabel="density")
        return svg_plot([line_series("pdf", x, y)], spec)

    _emit(args, "\n".join(lines) + "\n", build_svg)
    return 0


def cmd_gh_sample(args):
    dist = parse_distribution_spec(args.dist)
    size = args.size or 1000
    rng = np.random.default_rng(np.random.SeedSequence(entropy=args.seed, spawn_key=(0,)))
    draws = std_sample(dist, rng, size)
    text = "\n".join(fmt(v) for v in draws) + "\n"
    _emit(args, text)
    return 0


def cmd_ingest(args):
    series = parse_ohlcv_csv(_read_text_file(args.data))
    if args.log_returns and args.kind is not None:
        raise InputError("--log-returns conflicts with --kind")
    if args.log_returns:
        vals = log_returns(series, field=args.field)
    else:
        vals = returns(series, kind=args.kind or "gross", field=args.field)
    text = "\n".join(fmt(v) for v in vals) + "\n"
    _emit(args, text)
    return 0


def cmd_compare(args):
    series = parse_ohlcv_csv(_read_text_file(args.data))
    if args.log_returns and args.kind is not None:
        raise InputError("--log-returns conflicts with --kind")
    if args.log_returns:
        vals = log_returns(series, field=args.field)
    else:
        vals = returns(series, kind=args.kind or "gross", field=args.field)
    sample = make_sample(vals)
    dist = parse_distribution_spec(args.dist)
    u0 = args.u0 if args.u0 is not None else float(np.quantile(sample.values, 0.02))
    u1 = args.u1 if args.u1 is not None else float(np.quantile(sample.values, 0.98))
    if not u0 < u1:
        raise InputError("compare window is empty")
    g = _grid_arg(args.grid)
    m = 101 if g == "order-statistics" else g
    grid = make_grid(np.linspace(u0, u1, m))
    data_curve = empirical_mef_curve(sample, grid)
    model_curve = theoretical_mef_curve(dist, grid)

    def build_svg():
        w, h = _plot_dims(args)
        spec = PlotSpec(width=w, height=h, title="mean excess: data vs model")
        return svg_plot(
            [
                line_series("data emef", grid.points, data_curve.values),
                line_series("model mef", grid.points, model_curve.values),
            ],
            spec,
        )

    _emit(args, compare_csv(data_curve, model_curve), build_svg)
    print(f"sup_deviation = {fmt(sup_deviation(data_curve, model_curve))}")
    return 0


def _add_common(p, *names):
    if "dist" in names:
        p.add_argument("--dist", required=True, help="distribution spec, e.g. 'exponential(lambda=2)'")
    if "grid" in names:
        p.add_argument("--grid", default=None, help="point count or 'order-stats'")
    if "window" in names:
        p.add_argument("--u0", type=float, default=None)
        p.add_argument("--u1", type=float, default=None)
    if "band" in names:
        p.add_argument("--A", type=float, default=1.0)
        p.add_argument("--A1", type=float, default=1.0)
    if "mc" in names:
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--reps", type=int, default=None)
        p.add_argument("--size", type=int, default=None)
        p.add_argument("--full", action="store_true", help="full-protocol reps/size (6000 x 4000)")
    if "out" in names:
        p.add_argument("--csv", default=None, help="write CSV here instead of stdout")
    if "svg" in names:
        p.add_argument("--svg", default=None, help="also render an SVG plot")
    if "returns" in names:
        p.add_argument("--field", default="close")
        p.add_argument("--log-returns", dest="log_returns", action="store_true")
        p.add_argument("--kind", choices=["simple", "gross"], default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="meanex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("emef", help="empirical mean excess curve")
    p.add_argument("sample")
    _add_common(p, "grid", "out", "svg")
    p.set_defaults(func=cmd_emef)

    p = sub.add_parser("band", help="uniform consistency band")
    p.add_argument("sample")
    _add_common(p, "grid", "window", "band", "out", "svg")
    p.set_defaults(func=cmd_band)

    p = sub.add_parser("stallion", help="replicate-averaged mean excess curve")
    _add_common(p, "dist", "grid", "window", "mc", "out", "svg")
    p.set_defaults(func=cmd_stallion)

    p = sub.add_parser("coverage", help="band coverage experiment")
    _add_common(p, "dist", "window", "band", "mc", "out")
    p.add_argument("--eps", type=float, default=0.05, help="nominal miss level recorded in the report")
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("fit-gpd", help="GPD fit from mean-excess linearity")
    p.add_argument("sample")
    _add_common(p, "grid", "out")
    p.set_defaults(func=cmd_fit_gpd)

    p = sub.add_parser("fdelta", help="smoothness condition statistic")
    _add_common(p, "dist", "window", "out")
    p.set_defaults(func=cmd_fdelta)

    p = sub.add_parser("gh-pdf", help="density table")
    _add_common(p, "dist", "grid", "window", "out", "svg")
    p.set_defaults(func=cmd_gh_pdf)

    p = sub.add_parser("gh-sample", help="seeded draws")
    _add_common(p, "dist", "mc", "out")
    p.set_defaults(func=cmd_gh_sample)

    p = sub.add_parser("ingest", help="OHLCV to return series")
    p.add_argument("data")
    _add_common(p, "returns", "out")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("compare", help="data emef vs model mef")
    p.add_argument("--data", required=True)
    _add_common(p, "dist", "grid", "window", "returns", "out", "svg")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, NumericError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
