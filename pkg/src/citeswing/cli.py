"""Command-line front end.

Subcommands:

    summary   per-year aggregate rows (n, k, T, h)
    csf       swing-factor intervals for consecutive years
    ratios    time-normalized tc/cu/tu rows
    stats     descriptive statistics of a chosen series
    fit       nonlinear model fit of a series against publication age
    report    everything at once as one JSON document plus two SVG charts

Data goes to stdout (or --out); errors go to stderr with exit code 1;
usage problems exit 2. The report JSON is byte-stable across runs: floats
are trimmed to 6 significant digits and chart output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

from . import charts, corpus, diffusion, fitting, ratios, stats
from .errors import CiteswingError
from .rounding import round_half_away, sig6

SERIES_CHOICES = ("tc", "cu", "tu", "csf_o", "csf_e")

# reference parameter sets a correct fit must dominate on SSE; surfaced in the
# report as reference_sse (the rational set visibly misfits the bundled data)
FIT_BASELINES = {
    "tc_harris": ("harris", "tc", (-5.789, 6.114, 0.242)),
    "tu_rational": ("rational", "tu", (7.55e-13, 4.346e10, 2.404e10, 7.068e10)),
}

STATS_HEADER = ("count", "mean", "median", "range", "std_dev", "cv", "excess_kurtosis")


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation; ref_year must exceed every input pub_year
    (enforced by the ratio computations per failing year)."""

    command: str
    input_path: str
    input_kind: str = "aggregates"
    ref_year: int = ratios.DEFAULT_REF_YEAR
    output_format: str = "csv"
    output_path: str | None = None
    chart_path: str | None = None
    series: str | None = None
    model: str | None = None
    signed: bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="citeswing",
        description="Citation swing factor and time-normalized cited/uncited "
                    "ratio analytics over yearly citation data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, ref_year: bool = True) -> None:
        p.add_argument("--input", required=True, help="input CSV path")
        p.add_argument("--kind", choices=("records", "aggregates"),
                       default="aggregates",
                       help="input layout (default: aggregates)")
        if ref_year:
            p.add_argument("--ref-year", type=int, default=ratios.DEFAULT_REF_YEAR,
                           help="observation year for ages (default: %(default)s)")
        p.add_argument("--format", choices=("csv", "json"), default="csv",
                       help="output format (default: csv)")
        p.add_argument("--out", default=None,
                       help="output file (default: stdout)")

    common(sub.add_parser("summary", help="per-year aggregate rows"),
           ref_year=False)
    common(sub.add_parser("csf", help="swing-factor interval table"),
           ref_year=False)
    common(sub.add_parser("ratios", help="time-normalized ratio table"))

    p_stats = sub.add_parser("stats", help="descriptive statistics of a series")
    common(p_stats)
    p_stats.add_argument("--series", choices=SERIES_CHOICES, required=True)
    p_stats.add_argument("--signed", action="store_true",
                         help="keep signs of swing-factor series "
                              "(default uses magnitudes)")

    p_fit = sub.add_parser("fit", help="fit a model to a series vs age")
    common(p_fit)
    p_fit.add_argument("--series", choices=SERIES_CHOICES, required=True)
    p_fit.add_argument("--model", choices=sorted(fitting.MODELS), required=True)

    p_report = sub.add_parser("report", help="full JSON report plus charts")
    common(p_report)
    p_report.add_argument("--chart", default=None,
                          help="chart path stem; NAME.svg yields NAME-csf.svg "
                               "and NAME-ratios.svg")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=args.input,
        input_kind=args.kind,
        ref_year=getattr(args, "ref_year", ratios.DEFAULT_REF_YEAR),
        output_format=args.format,
        output_path=args.out,
        chart_path=getattr(args, "chart", None),
        series=getattr(args, "series", None),
        model=getattr(args, "model", None),
        signed=getattr(args, "signed", False),
    )


def _load_aggregates(cfg: RunConfig) -> list[corpus.AggregateRow]:
    text = Path(cfg.input_path).read_text(encoding="utf-8")
    if cfg.input_kind == "records":
        cohorts = corpus.build_cohorts(corpus.parse_records_csv(text))
        rows = [corpus.cohort_aggregate(c) for c in cohorts]
    else:
        rows = corpus.parse_aggregates_csv(text)
    return sorted(rows, key=lambda r: r.pub_year)


def _aggregate_dicts(rows: Sequence[corpus.AggregateRow]) -> list[dict]:
    return [asdict(r) for r in rows]


def _series_values(cfg: RunConfig, rows: Sequence[corpus.AggregateRow],
                   signed: bool) -> list[float]:
    if cfg.series in ("tc", "cu", "tu"):
        table = ratios.ratio_table(rows, cfg.ref_year)
        return [getattr(r, cfg.series) for r in table]
    intervals = diffusion.csf_table(rows)
    values = [iv.csf_observed if cfg.series == "csf_o" else iv.csf_expected
              for iv in intervals]
    return values if signed else [abs(v) for v in values]


def _fit_data(cfg: RunConfig,
              rows: Sequence[corpus.AggregateRow]) -> tuple[list[float], list[float]]:
    """Series values against publication age, ascending by age."""
    if cfg.series in ("tc", "cu", "tu"):
        table = ratios.ratio_table(rows, cfg.ref_year)
        pairs = [(r.age, getattr(r, cfg.series)) for r in table]
    else:
        intervals = diffusion.csf_table(rows)
        attr = "csf_observed" if cfg.series == "csf_o" else "csf_expected"
        pairs = [(cfg.ref_year - iv.year_to, getattr(iv, attr)) for iv in intervals]
    pairs.sort()
    return [p[0] for p in pairs], [p[1] for p in pairs]


def _cmd_summary(cfg: RunConfig) -> str:
    rows = _load_aggregates(cfg)
    if cfg.output_format == "json":
        return json.dumps(_aggregate_dicts(rows), indent=2) + "\n"
    return corpus.serialize_aggregates_csv(rows)


def _cmd_csf(cfg: RunConfig) -> str:
    intervals = diffusion.csf_table(_load_aggregates(cfg))
    if cfg.output_format == "json":
        return diffusion.intervals_to_json(intervals) + "\n"
    return diffusion.intervals_to_csv(intervals)


def _cmd_ratios(cfg: RunConfig) -> str:
    table = ratios.ratio_table(_load_aggregates(cfg), cfg.ref_year)
    if cfg.output_format == "json":
        return ratios.ratios_to_json(table) + "\n"
    return ratios.ratios_to_csv(table)


def _cmd_stats(cfg: RunConfig) -> str:
    values = _series_values(cfg, _load_aggregates(cfg), cfg.signed)
    summary = stats.describe(values)
    if cfg.output_format == "json":
        return summary.to_json() + "\n"
    record = asdict(summary)
    cells = [str(record["count"])]
    cells += [f"{round_half_away(record[key], 4):.4f}" for key in STATS_HEADER[1:]]
    return ",".join(STATS_HEADER) + "\n" + ",".join(cells) + "\n"


def _cmd_fit(cfg: RunConfig) -> str:
    xs, ys = _fit_data(cfg, _load_aggregates(cfg))
    model = fitting.get_model(cfg.model)
    result = fitting.fit(model, xs, ys)
    if cfg.output_format == "json":
        return result.to_json() + "\n"
    return fitting.predictions_to_csv(model, result.params, xs, ys)


def _chart_paths(base: str) -> tuple[str, str]:
    stem = base[:-4] if base.endswith(".svg") else base
    return f"{stem}-csf.svg", f"{stem}-ratios.svg"


def _csf_chart(intervals: Sequence[diffusion.CsfInterval]) -> str:
    observed = charts.ChartSeries(
        label="CSF (observed)",
        points=tuple((iv.year_to, abs(iv.csf_observed)) for iv in intervals),
        style="dashed",
    )
    expected = charts.ChartSeries(
        label="CSF (expected)",
        points=tuple((iv.year_to, abs(iv.csf_expected)) for iv in intervals),
        style="line",
    )
    return charts.render_chart([observed, expected],
                               x_label="publication year",
                               y_label="|CSF|",
                               title="Citation swing factor by year")


def _ratios_chart(table: Sequence[ratios.RatioRow]) -> str:
    series = [
        charts.ChartSeries(label=name.upper(),
                           points=tuple((r.age, getattr(r, name)) for r in table))
        for name in ("tc", "cu", "tu")
    ]
    return charts.render_chart(series,
                               x_label="publication age (years)",
                               y_label="ratio (1/years)",
                               title="Time-normalized ratios by publication age")


def _sig6_tree(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return sig6(obj)
    if isinstance(obj, dict):
        return {k: _sig6_tree(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sig6_tree(v) for v in obj]
    return obj


def _report_fits(table: Sequence[ratios.RatioRow]) -> dict:
    ages = [r.age for r in table]
    out = {}
    for key, (model_id, series_name, baseline) in FIT_BASELINES.items():
        model = fitting.get_model(model_id)
        values = [getattr(r, series_name) for r in table]
        result = fitting.fit(model, ages, values)
        entry = asdict(result)
        entry["params"] = list(result.params)
        try:
            entry["reference_sse"] = fitting.sse(model, baseline, ages, values)
        except CiteswingError:
            entry["reference_sse"] = None
        out[key] = entry
    return out


def _cmd_report(cfg: RunConfig) -> str:
    rows = _load_aggregates(cfg)
    intervals = diffusion.csf_table(rows)
    table = ratios.ratio_table(rows, cfg.ref_year)

    series = {
        "tc": [r.tc for r in table],
        "cu": [r.cu for r in table],
        "tu": [r.tu for r in table],
        "csf_o": diffusion.observed_magnitudes(intervals),
        "csf_e": diffusion.expected_magnitudes(intervals),
    }
    document = {
        "aggregates": _aggregate_dicts(rows),
        "csf_intervals": [asdict(iv) for iv in intervals],
        "ratios": [ratios.row_dict(r) for r in table],
        "stats": {name: asdict(stats.describe(vals))
                  for name, vals in series.items()},
        "correlations": {
            "tc_cu": stats.pearson(series["tc"], series["cu"]),
            "cu_tu": stats.pearson(series["cu"], series["tu"]),
            "tc_tu": stats.pearson(series["tc"], series["tu"]),
        },
        "regressions": {
            "cu_on_tu": asdict(stats.linreg(series["tu"], series["cu"])),
            "tc_on_tu": asdict(stats.linreg(series["tu"], series["tc"])),
        },
        "fits": _report_fits(table),
    }

    if cfg.chart_path:
        csf_path, ratio_path = _chart_paths(cfg.chart_path)
        Path(csf_path).write_text(_csf_chart(intervals), encoding="utf-8")
        Path(ratio_path).write_text(_ratios_chart(table), encoding="utf-8")

    return json.dumps(_sig6_tree(document), indent=2) + "\n"


_HANDLERS = {
    "summary": _cmd_summary,
    "csf": _cmd_csf,
    "ratios": _cmd_ratios,
    "stats": _cmd_stats,
    "fit": _cmd_fit,
    "report": _cmd_report,
}


def run(argv: list[str] | None = None) -> int:
    """Dispatch one invocation; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the usage message
        return int(exc.code or 0)
    cfg = _config_from_args(args)
    try:
        output = _HANDLERS[cfg.command](cfg)
    except (CiteswingError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.output_path:
        Path(cfg.output_path).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
