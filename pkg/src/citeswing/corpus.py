"""Bibliographic input: per-document citation records and yearly aggregates.

Two CSV layouts are accepted (comma-separated, UTF-8, mandatory header,
RFC-4180 quoting):

    records.csv     doc_id,journal,pub_year,citations
    aggregates.csv  year,n_published,n_cited,total_citations,h_index

Per-document records are grouped into one cohort per publication year; a
cohort aggregates to the yearly row (n published, k cited, total citations,
h-index) that the indicator modules consume. Years with no publications are
simply absent from cohort lists; downstream interval math treats missing
years as gaps.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import indices
from .errors import (
    BadFieldCountError,
    DuplicateDocIdError,
    InvariantViolationError,
    MissingHeaderError,
    NegativeCitationsError,
    NonNumericFieldError,
    YearOutOfRangeError,
)

RECORDS_HEADER = ("doc_id", "journal", "pub_year", "citations")
AGGREGATES_HEADER = ("year", "n_published", "n_cited", "total_citations", "h_index")

# validity window for publication years
YEAR_MIN = 1900
YEAR_MAX = 2100


@dataclass(frozen=True)
class PublicationRecord:
    """One document: identifier, journal, publication year, citations received."""

    doc_id: str
    journal: str
    pub_year: int
    citations: int


@dataclass(frozen=True)
class YearCohort:
    """All documents published in one year, as a multiset of citation counts."""

    pub_year: int
    citation_counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.citation_counts)

    @property
    def k(self) -> int:
        return sum(1 for c in self.citation_counts if c > 0)


@dataclass(frozen=True)
class AggregateRow:
    """Yearly totals: published (n), cited (k), total citations (T), h-index."""

    pub_year: int
    n_published: int
    n_cited: int
    total_citations: int
    h_index: int


def _rows(text: str) -> "csv.reader":
    return csv.reader(io.StringIO(text))


def _check_header(row: list[str] | None, expected: tuple[str, ...]) -> None:
    got = tuple(f.strip() for f in row) if row is not None else ()
    if got != expected:
        raise MissingHeaderError(",".join(expected), ",".join(got))


def _int_field(value: str, row_no: int, column: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise NonNumericFieldError(row_no, column, value) from None


def parse_records_csv(text: str,
                      year_min: int = YEAR_MIN,
                      year_max: int = YEAR_MAX) -> list[PublicationRecord]:
    """Parse a records.csv document into PublicationRecords, in file order.

    Row numbers in errors count the header as row 1.
    """
    reader = _rows(text)
    _check_header(next(reader, None), RECORDS_HEADER)
    records = []
    for row_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(RECORDS_HEADER):
            raise BadFieldCountError(row_no, len(RECORDS_HEADER), len(row))
        doc_id, journal, pub_year_s, citations_s = (f.strip() for f in row)
        if not doc_id:
            raise InvariantViolationError(row_no, "doc_id is empty")
        pub_year = _int_field(pub_year_s, row_no, "pub_year")
        citations = _int_field(citations_s, row_no, "citations")
        if citations < 0:
            raise NegativeCitationsError(row_no, citations)
        if not year_min <= pub_year <= year_max:
            raise YearOutOfRangeError(row_no, pub_year, year_min, year_max)
        records.append(PublicationRecord(doc_id, journal, pub_year, citations))
    return records


def serialize_records_csv(records: Iterable[PublicationRecord]) -> str:
    """Inverse of parse_records_csv (round-trips any valid record list)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(RECORDS_HEADER)
    for r in records:
        writer.writerow([r.doc_id, r.journal, r.pub_year, r.citations])
    return out.getvalue()


def build_cohorts(records: Sequence[PublicationRecord]) -> list[YearCohort]:
    """Group records into one cohort per publication year, ascending by year.

    A doc_id occurring twice within the same year is rejected: silently
    merging would corrupt the published count n.
    """
    seen: dict[int, set[str]] = {}
    by_year: dict[int, list[int]] = {}
    for r in records:
        ids = seen.setdefault(r.pub_year, set())
        if r.doc_id in ids:
            raise DuplicateDocIdError(r.doc_id, r.pub_year)
        ids.add(r.doc_id)
        by_year.setdefault(r.pub_year, []).append(r.citations)
    return [YearCohort(year, tuple(by_year[year])) for year in sorted(by_year)]


def cohort_aggregate(cohort: YearCohort) -> AggregateRow:
    """Reduce a cohort to its yearly totals (n, k, T, h)."""
    return AggregateRow(
        pub_year=cohort.pub_year,
        n_published=cohort.n,
        n_cited=cohort.k,
        total_citations=sum(cohort.citation_counts),
        h_index=indices.h_index(cohort.citation_counts),
    )


def _check_aggregate_invariants(row_no: int, row: AggregateRow) -> None:
    if row.n_published < 0 or row.n_cited < 0 or row.total_citations < 0 or row.h_index < 0:
        raise InvariantViolationError(row_no, "counts must be non-negative")
    if row.n_cited > row.n_published:
        raise InvariantViolationError(row_no, "n_cited > n_published")
    if row.h_index ** 2 > row.total_citations:
        raise InvariantViolationError(row_no, "h_index^2 > total_citations")
    if row.h_index > row.n_cited:
        raise InvariantViolationError(row_no, "h_index > n_cited")


def parse_aggregates_csv(text: str) -> list[AggregateRow]:
    """Parse an aggregates.csv document, validating each row's invariants."""
    reader = _rows(text)
    _check_header(next(reader, None), AGGREGATES_HEADER)
    rows = []
    for row_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(AGGREGATES_HEADER):
            raise BadFieldCountError(row_no, len(AGGREGATES_HEADER), len(row))
        fields = [f.strip() for f in row]
        values = [_int_field(v, row_no, col)
                  for v, col in zip(fields, AGGREGATES_HEADER)]
        agg = AggregateRow(*values)
        _check_aggregate_invariants(row_no, agg)
        rows.append(agg)
    return rows


def serialize_aggregates_csv(rows: Iterable[AggregateRow]) -> str:
    """Inverse of parse_aggregates_csv."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(AGGREGATES_HEADER)
    for r in rows:
        writer.writerow([r.pub_year, r.n_published, r.n_cited,
                         r.total_citations, r.h_index])
    return out.getvalue()
