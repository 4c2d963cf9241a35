"""Truncated cluster series for the finite-volume pressure."""
import itertools
import logging
import math
from collections import Counter
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from src.combinatorics import connected_sum_batch, is_connected, vertex_pairs
from src.config import ENUMERATION_LIMITS
from src.errors import BudgetExceededError, IncompleteTableError
from src.polymers import ActivityTable

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def cluster_factor(n: int, overlaps: Tuple[bool, ...]) -> float:
    """Sum over connected spanning subgraphs of the incompatibility graph of (-1)^|E|

    overlaps flags the pairs in vertex_pairs(n) order.
    """
    if n == 1:
        return 1.0
    edges = [pair for pair, hit in zip(vertex_pairs(n), overlaps) if hit]
    if not is_connected(n, edges, offset=1):
        return 0.0
    factors = -np.array([overlaps], dtype=float)
    return float(connected_sum_batch(n, factors)[0])


def cluster_terms(table: ActivityTable, order: int) -> List[float]:
    """ln Xi contributions of clusters with 1..order polymers

    Clusters are multisets of polymers, each weighted by
    cluster_factor * prod zeta / prod (multiplicity!).
    """
    if order < 1:
        raise ValueError("the cluster series starts at order 1")
    if order > ENUMERATION_LIMITS['max_cluster_order']:
        raise BudgetExceededError(
            f"cluster order {order} exceeds the limit {ENUMERATION_LIMITS['max_cluster_order']}"
        )
    size = len(table.volume)
    if not table.is_complete(size):
        raise IncompleteTableError(
            f"clusters on {size} sites need activities up to size {size}, "
            f"table has max size {table.max_size}"
        )
    polymers = [p for p in table.polymers if table[p] != 0.0]
    zetas = [table[p] for p in polymers]
    overlap = [[a.overlaps(b) for b in polymers] for a in polymers]
    terms = []
    for n in range(1, order + 1):
        total = 0.0
        for combo in itertools.combinations_with_replacement(range(len(polymers)), n):
            flags = tuple(overlap[combo[i - 1]][combo[j - 1]] for i, j in vertex_pairs(n))
            factor = cluster_factor(n, flags)
            if factor == 0.0:
                continue
            weight = math.prod(zetas[k] for k in combo)
            repeats = math.prod(math.factorial(m) for m in Counter(combo).values())
            total += factor * weight / repeats
        logger.debug("Cluster order %d contributes %.17g", n, total)
        terms.append(total)
    return terms


def pressure_truncated(table: ActivityTable, order: int) -> List[float]:
    """Partial sums S_1..S_order of the cluster series for P_Lambda"""
    size = len(table.volume)
    return [s / size for s in itertools.accumulate(cluster_terms(table, order))]
