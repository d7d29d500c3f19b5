"""Time-normalized cited/uncited ratios per publication year.

For a year with n published and k cited articles observed at ref_year
(age = ref_year - pub_year):

    tc = n / (k * age)          total over cited
    cu = k / ((n - k) * age)    cited over uncited
    tu = n / ((n - k) * age)    total over uncited

Both a cited and an uncited article must exist: k = 0 or k = n is a hard
error rather than a silent infinity, so a bad year can't poison downstream
statistics. Full precision is kept internally and in JSON; the CSV emitter
rounds to 3 decimals.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence

from .corpus import AggregateRow
from .errors import NoCitedError, NonPositiveAgeError, NoUncitedError
from .rounding import round_half_away

DEFAULT_REF_YEAR = 2021

RATIOS_HEADER = ("pub_year", "age", "n", "k", "uncited", "tc", "cu", "tu")


@dataclass(frozen=True)
class RatioRow:
    """One publication year's counts and its three age-normalized ratios."""

    pub_year: int
    ref_year: int
    age: int
    n: int
    k: int
    uncited: int
    tc: float
    cu: float
    tu: float


def ratio_row(n: int, k: int, pub_year: int, ref_year: int) -> RatioRow:
    """Compute the three ratios for one year; needs 0 < k < n and a positive age."""
    if ref_year <= pub_year:
        raise NonPositiveAgeError(pub_year)
    if k > n:
        raise ValueError(f"cited count {k} exceeds published count {n}")
    if k == 0:
        raise NoCitedError(pub_year)
    if k == n:
        raise NoUncitedError(pub_year)
    age = ref_year - pub_year
    uncited = n - k
    return RatioRow(
        pub_year=pub_year,
        ref_year=ref_year,
        age=age,
        n=n,
        k=k,
        uncited=uncited,
        tc=n / (k * age),
        cu=k / (uncited * age),
        tu=n / (uncited * age),
    )


def ratio_table(rows: Sequence[AggregateRow],
                ref_year: int = DEFAULT_REF_YEAR) -> list[RatioRow]:
    """One RatioRow per aggregate row, ascending by publication year.

    Errors from ratio_row carry the failing year (see errors module).
    """
    return [ratio_row(row.n_published, row.n_cited, row.pub_year, ref_year)
            for row in sorted(rows, key=lambda r: r.pub_year)]


def row_dict(r: RatioRow) -> dict:
    """Mapping with exactly the CSV columns (ref_year stays internal)."""
    return {
        "pub_year": r.pub_year, "age": r.age, "n": r.n, "k": r.k,
        "uncited": r.uncited, "tc": r.tc, "cu": r.cu, "tu": r.tu,
    }


def ratios_to_csv(rows: Sequence[RatioRow]) -> str:
    """CSV table with ratios at 3 decimals."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(RATIOS_HEADER)
    for r in rows:
        writer.writerow([
            r.pub_year, r.age, r.n, r.k, r.uncited,
            f"{round_half_away(r.tc, 3):.3f}",
            f"{round_half_away(r.cu, 3):.3f}",
            f"{round_half_away(r.tu, 3):.3f}",
        ])
    return out.getvalue()


def ratios_to_json(rows: Sequence[RatioRow]) -> str:
    """Full-precision JSON array mirroring the CSV columns."""
    return json.dumps([row_dict(r) for r in rows], indent=2)
