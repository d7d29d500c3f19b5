"""Citation swing factor over consecutive-year intervals.

The swing factor is the slope d(theta)/d(epsilon) of the h-core-to-excess
fraction against the excess-to-total fraction. Two routes are computed for
every adjacent pair of years:

* observed - the finite-difference slope between the two years' diffusion
  points,
* expected - the closed form -R^3 / (h * E), equivalently -1/(theta *
  epsilon^3), evaluated at the interval's from-year,

together with the percentage gap between them. Values are kept signed and at
full precision; magnitude views exist for descriptive statistics, and the
CSV/JSON emitters apply presentation rounding only.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from typing import Sequence

from .corpus import AggregateRow
from .errors import (
    YearGapError,
    ZeroCoreError,
    ZeroDeltaEpsilonError,
    ZeroExcessError,
)
from .indices import DiffusionPoint, ZoneDecomposition, diffusion_point
from .rounding import round_half_away

__all__ = [
    "DiffusionPoint",
    "CsfInterval",
    "csf_expected",
    "csf_observed",
    "csf_table",
    "observed_magnitudes",
    "expected_magnitudes",
    "intervals_to_csv",
    "intervals_to_json",
    "INTERVALS_HEADER",
]

INTERVALS_HEADER = ("year_from", "year_to", "d_eps", "d_theta",
                    "csf_observed", "csf_expected", "pct_error")


@dataclass(frozen=True)
class CsfInterval:
    """Swing factor between two consecutive years.

    csf_expected is the closed form evaluated at year_from's decomposition;
    pct_error = 100 * |observed - expected| / |expected|.
    """

    year_from: int
    year_to: int
    d_eps: float
    d_theta: float
    csf_observed: float
    csf_expected: float
    pct_error: float


def csf_expected(z: ZoneDecomposition, year: int | None = None) -> float:
    """Closed-form swing factor -R^3/(h*E) of a single decomposition."""
    if z.h == 0:
        raise ZeroCoreError(year)
    if z.E == 0:
        raise ZeroExcessError(year)
    return -(z.T ** 1.5) / (z.h * z.E)


def csf_observed(p_from: DiffusionPoint, p_to: DiffusionPoint) -> float:
    """Finite-difference slope d(theta)/d(epsilon) between two points."""
    d_eps = p_to.epsilon - p_from.epsilon
    if d_eps == 0.0:
        raise ZeroDeltaEpsilonError(p_from.year or None, p_to.year or None)
    return (p_to.theta - p_from.theta) / d_eps


def csf_table(rows: Sequence[AggregateRow]) -> list[CsfInterval]:
    """One CsfInterval per adjacent year pair of a consecutive-year series."""
    points = []
    decomps = []
    for row in rows:
        z = ZoneDecomposition.from_totals(row.total_citations, row.h_index)
        if z.h == 0:
            raise ZeroCoreError(row.pub_year)
        decomps.append(z)
        points.append(diffusion_point(z, row.pub_year))

    intervals = []
    for i in range(len(rows) - 1):
        y0, y1 = rows[i].pub_year, rows[i + 1].pub_year
        if y1 != y0 + 1:
            raise YearGapError(y0, y1)
        observed = csf_observed(points[i], points[i + 1])
        expected = csf_expected(decomps[i], year=y0)
        intervals.append(CsfInterval(
            year_from=y0,
            year_to=y1,
            d_eps=points[i + 1].epsilon - points[i].epsilon,
            d_theta=points[i + 1].theta - points[i].theta,
            csf_observed=observed,
            csf_expected=expected,
            pct_error=100.0 * abs(observed - expected) / abs(expected),
        ))
    return intervals


def observed_magnitudes(intervals: Sequence[CsfInterval]) -> list[float]:
    """|observed| series, the sign-free view used for descriptive statistics."""
    return [abs(iv.csf_observed) for iv in intervals]


def expected_magnitudes(intervals: Sequence[CsfInterval]) -> list[float]:
    """|expected| series, the sign-free view used for descriptive statistics."""
    return [abs(iv.csf_expected) for iv in intervals]


def intervals_to_csv(intervals: Sequence[CsfInterval]) -> str:
    """CSV table of intervals; slopes at 3 decimals, deltas at 6, error at 2."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(INTERVALS_HEADER)
    for iv in intervals:
        writer.writerow([
            iv.year_from,
            iv.year_to,
            f"{round_half_away(iv.d_eps, 6):.6f}",
            f"{round_half_away(iv.d_theta, 6):.6f}",
            f"{round_half_away(iv.csf_observed, 3):.3f}",
            f"{round_half_away(iv.csf_expected, 3):.3f}",
            f"{round_half_away(iv.pct_error, 2):.2f}",
        ])
    return out.getvalue()


def intervals_to_json(intervals: Sequence[CsfInterval]) -> str:
    """Full-precision JSON array of interval objects."""
    return json.dumps([asdict(iv) for iv in intervals], indent=2)
