"""CSV emission for curves, bands, fits, and experiment reports.

All emitters produce deterministic UTF-8 text with LF line endings and
numbers formatted with %.12g, so identical inputs yield byte-identical
files. Undefined values appear as nan.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .gpdfit import GpdParams, OlsFit
from .montecarlo import ExperimentReport
from .ohlcv import PriceSeries
from .types import Band, MefCurve

__all__ = [
    "fmt",
    "curve_csv",
    "band_csv",
    "fit_csv",
    "experiment_csv",
    "compare_csv",
    "ohlcv_csv",
    "write_text",
]


def fmt(x: float) -> str:
    return "%.12g" % float(x)


def curve_csv(curve: MefCurve) -> str:
    lines = ["u,e"]
    for u, e in zip(curve.grid.points, curve.values):
        lines.append(f"{fmt(u)},{fmt(e)}")
    return "\n".join(lines) + "\n"


def band_csv(band: Band) -> str:
    lines = ["u,e,lower,upper"]
    rows = zip(band.curve.grid.points, band.curve.values, band.lower, band.upper)
    for u, e, lo, hi in rows:
        lines.append(f"{fmt(u)},{fmt(e)},{fmt(lo)},{fmt(hi)}")
    return "\n".join(lines) + "\n"


def fit_csv(params: GpdParams, fit: OlsFit) -> str:
    header = "xi_hat,beta_hat,a_hat,b_hat,r2"
    row = ",".join(fmt(v) for v in (params.xi, params.beta, fit.a_hat, fit.b_hat, fit.r2))
    return header + "\n" + row + "\n"


def experiment_csv(report: ExperimentReport) -> str:
    lines = [
        f"# name={report.name},seed={report.seed},reps={report.replicate_count}",
        "metric,value",
    ]
    for key, value in report.metrics:
        lines.append(f"{key},{fmt(value)}")
    return "\n".join(lines) + "\n"


def compare_csv(data_curve: MefCurve, model_curve: MefCurve) -> str:
    """Side-by-side empirical vs model mean excess on a shared grid."""
    if not np.array_equal(data_curve.grid.points, model_curve.grid.points):
        raise DomainError("compare requires identical grids")
    lines = ["u,e_data,e_model"]
    rows = zip(data_curve.grid.points, data_curve.values, model_curve.values)
    for u, a, b in rows:
        lines.append(f"{fmt(u)},{fmt(a)},{fmt(b)}")
    return "\n".join(lines) + "\n"


def ohlcv_csv(series: PriceSeries) -> str:
    """Serialize a PriceSeries back to the input CSV format."""
    lines = ["date,open,high,low,close,volume"]
    for rec in series.records:
        nums = ",".join(fmt(v) for v in (rec.open, rec.high, rec.low, rec.close, rec.volume))
        lines.append(f"{rec.date.isoformat()},{nums}")
    return "\n".join(lines) + "\n"


def write_text(path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
