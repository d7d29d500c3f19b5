"""h-index and citation-zone decomposition.

A multiset of per-document citation counts splits into three zones once the
documents are ranked by citations: the h-core square (h*h citations), the
excess citations of core documents above the square, and the tail carried by
documents ranked below h. The decomposition also exposes the *net* excess
E = T - h*h (excess-above-core plus tail lumped together), which is the
quantity the swing-factor math runs on, together with the derived fractions
epsilon = sqrt(E/T) and theta = sqrt(H/E).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import ZeroExcessError, ZeroTotalError


def h_index(counts: Iterable[int]) -> int:
    """Largest r such that the r-th largest count is at least r (0 if empty)."""
    ranked = sorted(counts, reverse=True)
    h = 0
    for rank, c in enumerate(ranked, start=1):
        if c >= rank:
            h = rank
        else:
            break
    return h


@dataclass(frozen=True)
class ZoneDecomposition:
    """Zone split of a citation-count multiset.

    T, h, H and E are exact integers with T = H + E and H = h*h; R and e are
    their real square roots. core_square, excess_above_core and tail are the
    classic three-zone split and always add up to T.
    """

    T: int
    h: int
    H: int
    E: int
    R: float
    e: float
    core_square: int
    excess_above_core: int
    tail: int

    @classmethod
    def from_totals(cls, total: int, h: int,
                    excess_above_core: int = 0) -> "ZoneDecomposition":
        """Build a decomposition from totals alone, without per-document counts.

        The split of E between core-excess and tail is not recoverable from
        totals; by default all of it is assigned to the tail.
        """
        core = h * h
        if core > total:
            raise ValueError(f"h^2 = {core} exceeds total citations {total}")
        net_excess = total - core
        if not 0 <= excess_above_core <= net_excess:
            raise ValueError("excess_above_core must lie within the net excess")
        return cls(
            T=total, h=h, H=core, E=net_excess,
            R=math.sqrt(total), e=math.sqrt(net_excess),
            core_square=core,
            excess_above_core=excess_above_core,
            tail=net_excess - excess_above_core,
        )


def zone_decompose(counts: Iterable[int]) -> ZoneDecomposition:
    """Decompose a citation-count multiset into its h-zones."""
    ranked = sorted(counts, reverse=True)
    total = sum(ranked)
    h = h_index(ranked)
    core = h * h
    core_citations = sum(ranked[:h])
    return ZoneDecomposition(
        T=total, h=h, H=core, E=total - core,
        R=math.sqrt(total), e=math.sqrt(total - core),
        core_square=core,
        excess_above_core=core_citations - core,
        tail=total - core_citations,
    )


@dataclass(frozen=True)
class DiffusionPoint:
    """Per-year diffusion coordinates: epsilon = sqrt(E/T), theta = sqrt(H/E)."""

    year: int
    epsilon: float
    theta: float


def diffusion_point(z: ZoneDecomposition, year: int = 0) -> DiffusionPoint:
    """Diffusion coordinates of a decomposition; needs T > 0 and E > 0."""
    if z.T == 0:
        raise ZeroTotalError(year or None)
    if z.E == 0:
        raise ZeroExcessError(year or None)
    return DiffusionPoint(
        year=year,
        epsilon=math.sqrt(z.E / z.T),
        theta=math.sqrt(z.H / z.E),
    )
