"""Reference-table reproduction: actual twin counts, estimate rows, exports.

The "actual" column counts individual members of designated twin pairs
(a, a+2) that intersect [p, p**2]; a pair straddling the lower endpoint
contributes both members.  Estimates are driven by the odd-prime count
below p**2.  Exports are deterministic: byte-identical across runs.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from datetime import datetime, timezone
from decimal import Decimal, ROUND_HALF_UP
from pathlib import Path

import numpy as np

from . import estimates
from .primes import PrimeTable, is_prime

#: The seventeen levels of the reference table, 101 through 8009.
TABLE4_PRIMES = (101, 199, 307, 401, 503, 601, 701, 797, 907,
                 1009, 1999, 3001, 4001, 5003, 6007, 7001, 8009)


def round_half_away(x: float) -> int:
    """Round to nearest integer, ties away from zero (on the decimal repr)."""
    return int(Decimal(repr(float(x))).quantize(Decimal("1"), rounding=ROUND_HALF_UP))


def display_int(x: float, rounding: str = "half-away") -> int:
    if rounding == "half-away":
        return round_half_away(x)
    if rounding == "truncate":
        return int(x)
    raise ValueError(f"unknown rounding mode {rounding!r}")


def format_r(r: float) -> str:
    """The correction factor at five decimals, ties up."""
    return str(Decimal(repr(float(r))).quantize(Decimal("0.00001"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class EstimateRow:
    """One table row: level, actual count, both estimates, correction factor."""

    p: int
    actual: int
    eq7: float
    r: float
    eq15: float


@dataclass(frozen=True, eq=False)
class TableReport:
    rows: tuple[EstimateRow, ...]
    metadata: dict = field(default_factory=dict)


@dataclass(frozen=True)
class FigureSeries:
    """Signed percent differences of one estimate from the actual counts."""

    label: str
    points: tuple[tuple[int, float], ...]


def count_twin_pairs(p: int, table: PrimeTable) -> int:
    """Designated twin pairs (a, a+2), both prime, intersecting [p, p**2]."""
    if not is_prime(p) or p < 5:
        raise ValueError(f"p must be a prime >= 5, got {p}")
    if table.limit < p * p + 2:
        raise ValueError(f"table limit {table.limit} is below {p * p + 2}")
    qs = table.primes_in_range(max(5, p - 2), p * p)
    lowers = qs[qs % 6 == 5]
    return int(np.count_nonzero(table.is_prime_array(lowers + 2)))


def count_actual_twins(p: int, table: PrimeTable, *, mode: str = "individual") -> int:
    """Twin-prime members between p and p**2, individually or as pairs.

    Individual counting takes both members of every designated pair that
    meets [p, p**2], so a prime pair (p-2, p) contributes two.
    """
    pairs = count_twin_pairs(p, table)
    if mode == "individual":
        return 2 * pairs
    if mode == "pairs":
        return pairs
    raise ValueError(f"unknown counting mode {mode!r}")


def build_table4(primes_list, table: PrimeTable, *, rounding: str = "half-away") -> TableReport:
    """One EstimateRow per requested prime, deterministic for a given table."""
    display_int(0.0, rounding)  # validate the mode before any work
    for p in primes_list:
        if not is_prime(p) or p < 5:
            raise ValueError(f"prime list entry {p} is not a prime >= 5")
    top = max(primes_list, default=0)
    if primes_list and table.limit < top * top + 2:
        raise ValueError(f"table limit {table.limit} is below {top * top + 2}")

    rows = []
    for p in primes_list:
        pi_odd = table.count_primes_up_to(p * p) - 1  # drop 2: the wheels never see it
        rows.append(EstimateRow(
            p=p,
            actual=count_actual_twins(p, table),
            eq7=estimates.estimate_eq7(p, pi_odd),
            r=estimates.correction_r(p, pi_odd),
            eq15=estimates.estimate_eq15(p, pi_odd),
        ))
    meta = {
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "sieve_limit": table.limit,
        "rounding": rounding,
    }
    return TableReport(rows=tuple(rows), metadata=meta)


def figure1_series(report: TableReport) -> tuple[FigureSeries, FigureSeries]:
    """Percent differences of the unrounded estimates from the actual counts."""
    pts7, pts15 = [], []
    for row in sorted(report.rows, key=lambda r: r.p):
        if row.actual == 0:
            raise ValueError(f"actual count is zero at p={row.p}")
        pts7.append((row.p, 100.0 * (row.eq7 - row.actual) / row.actual))
        pts15.append((row.p, 100.0 * (row.eq15 - row.actual) / row.actual))
    return (FigureSeries("eq7", tuple(pts7)), FigureSeries("eq15", tuple(pts15)))


def export_report(report: TableReport, series: tuple[FigureSeries, FigureSeries],
                  out_dir) -> list[Path]:
    """Write table4.csv plus one two-column .dat file per series.

    CSV header is ``p,actual,eq7,r,eq15`` with rounded integer estimate
    columns and the five-decimal correction factor.  Each .dat line is
    ``<p> <pct_diff>`` with six significant digits.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rounding = report.metadata.get("rounding", "half-away")
    written = []

    csv_path = out / "table4.csv"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["p", "actual", "eq7", "r", "eq15"])
        for row in report.rows:
            writer.writerow([row.p, row.actual, display_int(row.eq7, rounding),
                             format_r(row.r), display_int(row.eq15, rounding)])
    written.append(csv_path)

    for s in series:
        dat_path = out / f"{s.label}.dat"
        with open(dat_path, "w") as fh:
            for p, pct in s.points:
                fh.write(f"{p} {pct:.6g}\n")
        written.append(dat_path)
    return written
