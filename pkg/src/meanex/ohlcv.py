"""Daily OHLCV ingestion and return-series construction.

Input format: CSV with header exactly

    date,open,high,low,close,volume

ISO dates (YYYY-MM-DD), positive prices satisfying
low <= min(open, close) <= max(open, close) <= high, nonnegative volume.
Duplicate dates are rejected; records are sorted by date on ingest.
Errors carry the 1-based data row number.

Returns are computed from closes: gross R_t = P_t / P_{t-1}, simple
R_t - 1, and log returns log(P_t / P_{t-1}), so a series of m records
yields m-1 returns.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from datetime import date as _date

import numpy as np

from .errors import InputError

__all__ = [
    "OhlcvRecord",
    "PriceSeries",
    "parse_ohlcv_csv",
    "returns",
    "log_returns",
    "monthly_last",
]

_HEADER = ["date", "open", "high", "low", "close", "volume"]


@dataclass(frozen=True)
class OhlcvRecord:
    date: _date
    open: float
    high: float
    low: float
    close: float
    volume: float


@dataclass(frozen=True)
class PriceSeries:
    """Date-sorted OHLCV records plus the field extraction helpers."""

    records: tuple
    symbol: str = ""

    @property
    def n(self) -> int:
        return len(self.records)

    def field(self, name: str) -> np.ndarray:
        if name not in _HEADER[1:]:
            raise InputError(f"unknown field {name!r}; expected one of {_HEADER[1:]}")
        return np.array([getattr(rec, name) for rec in self.records], dtype=float)

    def dates(self):
        return [rec.date for rec in self.records]


def _parse_row(row, rownum) -> OhlcvRecord:
    if len(row) != 6:
        raise InputError(f"row {rownum}: expected 6 fields, got {len(row)}")
    try:
        d = _date.fromisoformat(row[0].strip())
    except ValueError:
        raise InputError(f"row {rownum}: invalid date {row[0]!r}")
    try:
        o, h, l, c, v = (float(tok) for tok in row[1:])
    except ValueError:
        raise InputError(f"row {rownum}: non-numeric price or volume")
    if not all(np.isfinite([o, h, l, c, v])):
        raise InputError(f"row {rownum}: non-finite price or volume")
    if min(o, h, l, c) <= 0:
        raise InputError(f"row {rownum}: prices must be positive")
    if v < 0:
        raise InputError(f"row {rownum}: volume must be nonnegative")
    if not (l <= min(o, c) and max(o, c) <= h):
        raise InputError(f"row {rownum}: price bounds violated (need low <= open,close <= high)")
    return OhlcvRecord(date=d, open=o, high=h, low=l, close=c, volume=v)


def parse_ohlcv_csv(text_or_stream, symbol: str = "") -> PriceSeries:
    """Parse OHLCV CSV from a string or text stream into a PriceSeries."""
    if isinstance(text_or_stream, str):
        stream = io.StringIO(text_or_stream)
    else:
        stream = text_or_stream
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise InputError("no records: input is empty")
    if [h.strip().lower() for h in header] != _HEADER:
        raise InputError(f"bad header: expected {','.join(_HEADER)}")
    records = []
    seen = set()
    for rownum, row in enumerate(reader, start=1):
        if not row or all(not tok.strip() for tok in row):
            continue
        rec = _parse_row(row, rownum)
        if rec.date in seen:
            raise InputError(f"row {rownum}: duplicate date {rec.date.isoformat()}")
        seen.add(rec.date)
        records.append(rec)
    if not records:
        raise InputError("no records")
    records.sort(key=lambda r: r.date)
    return PriceSeries(records=tuple(records), symbol=symbol)


def _positive_field(series: PriceSeries, field: str) -> np.ndarray:
    p = series.field(field)
    if p.size < 2:
        raise InputError("returns require at least two records")
    if np.any(p <= 0):
        raise InputError(f"returns require positive {field} values")
    return p


def returns(series: PriceSeries, field: str = "close", kind: str = "gross") -> np.ndarray:
    """Period-over-period returns of a price field.

    kind 'gross': P_t / P_{t-1}; kind 'simple': P_t / P_{t-1} - 1.
    """
    if kind not in ("gross", "simple"):
        raise InputError(f"unknown return kind {kind!r}; expected 'gross' or 'simple'")
    p = _positive_field(series, field)
    gross = p[1:] / p[:-1]
    return gross if kind == "gross" else gross - 1.0


def log_returns(series: PriceSeries, field: str = "close") -> np.ndarray:
    p = _positive_field(series, field)
    return np.diff(np.log(p))


def monthly_last(series: PriceSeries) -> PriceSeries:
    """Keep only the last record of each calendar month."""
    keep = []
    for i, rec in enumerate(series.records):
        nxt = series.records[i + 1] if i + 1 < series.n else None
        if nxt is None or (nxt.date.year, nxt.date.month) != (rec.date.year, rec.date.month):
            keep.append(rec)
    return PriceSeries(records=tuple(keep), symbol=series.symbol)
