"""Polymer-gas partition function and the factorization of Z."""
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.config import TOLERANCES
from src.errors import IncompleteTableError, InconsistencyError
from src.model import SpinSystem, Volume
from src.polymers import ActivityTable, activity_table, single_site_weight
from .exact import free_energy_exact, partition_function_exact

logger = logging.getLogger(__name__)


def _polymers_by_lowest_site(table: ActivityTable) -> Dict[int, List[Tuple[int, float]]]:
    """Nonzero activities as (site mask, zeta), grouped by the lowest site index"""
    grouped: Dict[int, List[Tuple[int, float]]] = {}
    for polymer, zeta in table.nonzero().items():
        indices = [table.volume.index(site) for site in polymer.sites]
        mask = sum(1 << i for i in indices)
        grouped.setdefault(min(indices), []).append((mask, zeta))
    return grouped


def xi_exact(table: ActivityTable) -> float:
    """Xi = 1 + sum over collections of pairwise disjoint polymers of prod zeta

    Walks the lowest unused site: either it stays uncovered, or it is covered
    by a polymer R inside the unused sites. Sub-results are memoized by mask.
    """
    size = len(table.volume)
    if not table.is_complete(size):
        raise IncompleteTableError(
            f"the polymer gas on {size} sites needs activities up to size {size}, "
            f"table has max size {table.max_size}"
        )
    grouped = _polymers_by_lowest_site(table)
    memo = {0: 1.0}

    def xi_of(unused: int) -> float:
        if unused in memo:
            return memo[unused]
        lowest = (unused & -unused).bit_length() - 1
        rest = unused & ~(1 << lowest)
        value = xi_of(rest)
        for mask, zeta in grouped.get(lowest, ()):
            if mask & unused == mask:
                value += zeta * xi_of(unused & ~mask)
        memo[unused] = value
        return value

    return xi_of((1 << size) - 1)


def xi_lower_bound(table: ActivityTable) -> float:
    """1 - sum_R |zeta(R)|"""
    return 1.0 - sum(abs(z) for z in table.entries.values())


@dataclass(frozen=True)
class FactorizationResult:
    """Both sides of Z = w^|Lambda| Xi"""
    lhs: float
    rhs: float
    rel_err: float

    @property
    def passed(self) -> bool:
        """Agreement within the identity tolerance"""
        return self.rel_err <= TOLERANCES['identity_rel']


def factorization_check(
    sys: SpinSystem, vol: Volume, table: Optional[ActivityTable] = None
) -> FactorizationResult:
    """Compare the brute-force Z with single_site_weight^|Lambda| * Xi"""
    if table is None:
        table = activity_table(sys, vol, len(vol))
    lhs = partition_function_exact(sys, vol)
    rhs = single_site_weight(sys) ** len(vol) * xi_exact(table)
    rel_err = abs(lhs - rhs) / abs(lhs)
    logger.debug("Factorization on %d sites: Z=%.17g, w^n Xi=%.17g, rel err %.3g",
                 len(vol), lhs, rhs, rel_err)
    return FactorizationResult(lhs, rhs, rel_err)


def pressure_exact(
    sys: SpinSystem, vol: Volume, table: Optional[ActivityTable] = None, check: bool = True
) -> float:
    """P_Lambda = ln Xi_Lambda / |Lambda|

    With check set, f_Lambda = ln w + P_Lambda is confirmed against the
    brute-force free energy.
    """
    if table is None:
        table = activity_table(sys, vol, len(vol))
    xi = xi_exact(table)
    if xi <= 0:
        raise InconsistencyError(f"polymer-gas partition function is not positive: {xi!r}")
    pressure = math.log(xi) / len(vol)
    if check:
        free_energy = free_energy_exact(sys, vol)
        gap = abs(free_energy - math.log(single_site_weight(sys)) - pressure)
        if gap > TOLERANCES['identity_rel'] * max(1.0, abs(free_energy)):
            raise InconsistencyError(
                f"f - ln w = {free_energy - math.log(single_site_weight(sys))!r} "
                f"differs from P = {pressure!r}"
            )
    return pressure
