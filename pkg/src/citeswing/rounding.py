"""Presentation rounding helpers.

CSV reports round half away from zero (2.5 -> 3, -2.5 -> -3), matching the
usual spreadsheet convention; Python's builtin round() is banker's rounding
and would disagree on exact halves. JSON reports are trimmed to a fixed
number of significant digits so repeated runs are byte-identical.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal


def round_half_away(x: float, ndigits: int) -> float:
    """Round to ndigits decimals, ties away from zero."""
    q = Decimal(repr(x)).quantize(Decimal(1).scaleb(-ndigits), rounding=ROUND_HALF_UP)
    return float(q)


def sig6(x: float) -> float:
    """Trim to 6 significant digits (stable across runs and platforms)."""
    return float(f"{x:.6g}")
