"""Exception hierarchy shared across the package.

Every domain error derives from :class:`CiteswingError` so callers (notably
the CLI) can catch validation problems in one place. Exceptions carry the
structured context they were raised with (row, column, year, ...) as
attributes in addition to a readable message.
"""

from __future__ import annotations


class CiteswingError(Exception):
    """Base class for all domain errors raised by this package."""


# --- CSV ingestion -----------------------------------------------------------

class MissingHeaderError(CiteswingError):
    def __init__(self, expected: str, got: str):
        self.expected = expected
        self.got = got
        super().__init__(f"expected header {expected!r}, got {got!r}")


class BadFieldCountError(CiteswingError):
    def __init__(self, row: int, expected: int, got: int):
        self.row = row
        self.expected = expected
        self.got = got
        super().__init__(f"row {row}: expected {expected} fields, got {got}")


class NonNumericFieldError(CiteswingError):
    def __init__(self, row: int, column: str, value: str):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(f"row {row}: column {column!r} is not an integer: {value!r}")


class NegativeCitationsError(CiteswingError):
    def __init__(self, row: int, value: int):
        self.row = row
        self.value = value
        super().__init__(f"row {row}: citations is negative ({value})")


class YearOutOfRangeError(CiteswingError):
    def __init__(self, row: int, year: int, lo: int, hi: int):
        self.row = row
        self.year = year
        super().__init__(f"row {row}: year {year} outside validity window {lo}-{hi}")


class DuplicateDocIdError(CiteswingError):
    def __init__(self, doc_id: str, pub_year: int):
        self.doc_id = doc_id
        self.pub_year = pub_year
        super().__init__(f"duplicate doc_id {doc_id!r} within year {pub_year}")


class InvariantViolationError(CiteswingError):
    def __init__(self, row: int, which: str):
        self.row = row
        self.which = which
        super().__init__(f"row {row}: invariant violated: {which}")


# --- zone decomposition / diffusion ------------------------------------------

class ZeroTotalError(CiteswingError):
    def __init__(self, year: int | None = None):
        self.year = year
        super().__init__(_with_year("total citations is zero", year))


class ZeroExcessError(CiteswingError):
    def __init__(self, year: int | None = None):
        self.year = year
        super().__init__(_with_year("excess citations is zero", year))


class ZeroCoreError(CiteswingError):
    def __init__(self, year: int | None = None):
        self.year = year
        super().__init__(_with_year("h-index is zero", year))


class ZeroDeltaEpsilonError(CiteswingError):
    def __init__(self, year_from: int | None = None, year_to: int | None = None):
        self.year_from = year_from
        self.year_to = year_to
        detail = "" if year_from is None else f" for interval {year_from}->{year_to}"
        super().__init__(f"zero change in excess-to-total fraction{detail}; slope undefined")


class YearGapError(CiteswingError):
    def __init__(self, year_from: int, year_to: int):
        self.year_from = year_from
        self.year_to = year_to
        super().__init__(f"years {year_from} and {year_to} are not consecutive")


# --- time-normalized ratios ---------------------------------------------------

class NoCitedError(CiteswingError):
    def __init__(self, year: int | None = None):
        self.year = year
        super().__init__(_with_year("no cited articles (k = 0)", year))


class NoUncitedError(CiteswingError):
    def __init__(self, year: int | None = None):
        self.year = year
        super().__init__(_with_year("no uncited articles (k = n)", year))


class NonPositiveAgeError(CiteswingError):
    def __init__(self, year: int | None = None):
        self.year = year
        super().__init__(_with_year("reference year must exceed publication year", year))


# --- statistics / regression --------------------------------------------------

class LengthMismatchError(CiteswingError):
    def __init__(self, len_x: int, len_y: int):
        self.len_x = len_x
        self.len_y = len_y
        super().__init__(f"series lengths differ: {len_x} vs {len_y}")


class TooFewPointsError(CiteswingError):
    def __init__(self, which: str, needed: int, got: int):
        self.which = which
        self.needed = needed
        self.got = got
        super().__init__(f"{which} needs at least {needed} points, got {got}")


class ZeroVarianceError(CiteswingError):
    def __init__(self, which: str):
        self.which = which
        super().__init__(f"{which} undefined for a constant series")


# --- curve fitting --------------------------------------------------------------

class SingularDenominatorError(CiteswingError):
    def __init__(self, x: float):
        self.x = x
        super().__init__(f"model denominator is zero at x = {x}")


class AllStartsFailedError(CiteswingError):
    def __init__(self, n_starts: int):
        self.n_starts = n_starts
        super().__init__(f"all {n_starts} starts hit a singular denominator or diverged")


# --- charts ---------------------------------------------------------------------

class EmptyChartError(CiteswingError):
    def __init__(self, detail: str = "no series to draw"):
        super().__init__(detail)


def _with_year(msg: str, year: int | None) -> str:
    return msg if year is None else f"year {year}: {msg}"
