"""Citation swing factor and time-normalized cited/uncited indicator engine."""

from .corpus import (
    AggregateRow,
    PublicationRecord,
    YearCohort,
    build_cohorts,
    cohort_aggregate,
    parse_aggregates_csv,
    parse_records_csv,
)
from .diffusion import CsfInterval, csf_expected, csf_observed, csf_table
from .errors import CiteswingError
from .fitting import HARRIS, RATIONAL, FitOptions, FitResult, ModelSpec, fit
from .indices import DiffusionPoint, ZoneDecomposition, diffusion_point, h_index, zone_decompose
from .ratios import RatioRow, ratio_row, ratio_table
from .stats import DescriptiveStats, RegressionResult, describe, linreg, pearson

__version__ = "0.1.0"

__all__ = [
    "AggregateRow",
    "CiteswingError",
    "CsfInterval",
    "DescriptiveStats",
    "DiffusionPoint",
    "FitOptions",
    "FitResult",
    "HARRIS",
    "ModelSpec",
    "PublicationRecord",
    "RATIONAL",
    "RatioRow",
    "RegressionResult",
    "YearCohort",
    "ZoneDecomposition",
    "build_cohorts",
    "cohort_aggregate",
    "csf_expected",
    "csf_observed",
    "csf_table",
    "describe",
    "diffusion_point",
    "fit",
    "h_index",
    "linreg",
    "parse_aggregates_csv",
    "parse_records_csv",
    "pearson",
    "ratio_row",
    "ratio_table",
    "zone_decompose",
    "__version__",
]
