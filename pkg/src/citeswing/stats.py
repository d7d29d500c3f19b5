"""Descriptive statistics, Pearson correlation and simple OLS regression.

Conventions: sample (n-1) standard deviation; cv = std_dev / mean of the raw
series; excess kurtosis in the bias-corrected sample form (the spreadsheet
KURT convention), which goes negative for flat short series.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import LengthMismatchError, TooFewPointsError, ZeroVarianceError


def mean(xs: Sequence[float]) -> float:
    if len(xs) < 1:
        raise TooFewPointsError("mean", 1, len(xs))
    return sum(xs) / len(xs)


def median(xs: Sequence[float]) -> float:
    if len(xs) < 1:
        raise TooFewPointsError("median", 1, len(xs))
    ranked = sorted(xs)
    mid = len(ranked) // 2
    if len(ranked) % 2:
        return ranked[mid]
    return (ranked[mid - 1] + ranked[mid]) / 2.0


def value_range(xs: Sequence[float]) -> float:
    if len(xs) < 1:
        raise TooFewPointsError("range", 1, len(xs))
    return max(xs) - min(xs)


def std_dev(xs: Sequence[float]) -> float:
    if len(xs) < 2:
        raise TooFewPointsError("std_dev", 2, len(xs))
    m = mean(xs)
    return math.sqrt(sum((x - m) ** 2 for x in xs) / (len(xs) - 1))


def coefficient_of_variation(xs: Sequence[float]) -> float:
    sd = std_dev(xs)
    if sd == 0.0:
        raise ZeroVarianceError("cv")
    return sd / mean(xs)


def excess_kurtosis(xs: Sequence[float]) -> float:
    """Bias-corrected sample excess kurtosis:
    n(n+1)/((n-1)(n-2)(n-3)) * sum(z^4) - 3(n-1)^2/((n-2)(n-3)).
    """
    n = len(xs)
    if n < 4:
        raise TooFewPointsError("excess_kurtosis", 4, n)
    sd = std_dev(xs)
    if sd == 0.0:
        raise ZeroVarianceError("excess_kurtosis")
    m = mean(xs)
    z4 = sum(((x - m) / sd) ** 4 for x in xs)
    return (n * (n + 1) / ((n - 1) * (n - 2) * (n - 3)) * z4
            - 3 * (n - 1) ** 2 / ((n - 2) * (n - 3)))


@dataclass(frozen=True)
class DescriptiveStats:
    count: int
    mean: float
    median: float
    range: float
    std_dev: float
    cv: float
    excess_kurtosis: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def describe(xs: Sequence[float]) -> DescriptiveStats:
    """Full summary of a series; raises if any component is uncomputable
    (fewer than 4 points, or a constant series). The individual statistic
    functions remain available for partial summaries.
    """
    return DescriptiveStats(
        count=len(xs),
        mean=mean(xs),
        median=median(xs),
        range=value_range(xs),
        std_dev=std_dev(xs),
        cv=coefficient_of_variation(xs),
        excess_kurtosis=excess_kurtosis(xs),
    )


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson correlation of two equally long, nonconstant series."""
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))
    if len(x) < 2:
        raise TooFewPointsError("pearson", 2, len(x))
    mx, my = mean(x), mean(y)
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    if sxx == 0.0 or syy == 0.0:
        raise ZeroVarianceError("pearson")
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    return sxy / math.sqrt(sxx * syy)


@dataclass(frozen=True)
class RegressionResult:
    slope: float
    intercept: float
    r: float
    r_squared: float
    std_error: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def linreg(x: Sequence[float], y: Sequence[float]) -> RegressionResult:
    """OLS fit y = intercept + slope * x.

    r comes from pearson(); r_squared is computed independently as
    1 - SSE/SStot so the two routes cross-check each other. std_error is the
    standard error of the estimate, sqrt(SSE / (n - 2)).
    """
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))
    n = len(x)
    if n < 3:
        raise TooFewPointsError("linreg", 3, n)
    mx, my = mean(x), mean(y)
    sxx = sum((a - mx) ** 2 for a in x)
    if sxx == 0.0:
        raise ZeroVarianceError("linreg")
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    slope = sxy / sxx
    intercept = my - slope * mx
    sse = sum((b - intercept - slope * a) ** 2 for a, b in zip(x, y))
    sstot = sum((b - my) ** 2 for b in y)
    return RegressionResult(
        slope=slope,
        intercept=intercept,
        r=pearson(x, y),
        r_squared=1.0 - sse / sstot if sstot > 0.0 else 0.0,
        std_error=math.sqrt(sse / (n - 2)),
    )
