"""Exact polymer activities zeta(R) by summing over spin configurations on R."""
import itertools
import logging
import math

import numpy as np

from src.combinatorics import connected_sum_batch, is_connected, tree_matrix, vertex_pairs
from src.config import ENUMERATION_LIMITS
from src.errors import AssumptionViolationError, BudgetExceededError
from src.model import SpinSystem
from .weights import Polymer, log_activity_scale, single_site_weight

logger = logging.getLogger(__name__)


def check_activity_budget(sys: SpinSystem, size: int):
    """Validate |R| and N against the spin-sum budget"""
    if size > ENUMERATION_LIMITS['max_polymer_size']:
        raise BudgetExceededError(
            f"polymers of size {size} exceed the limit "
            f"{ENUMERATION_LIMITS['max_polymer_size']}"
        )
    if sys.N > ENUMERATION_LIMITS['max_spin_bound']:
        raise BudgetExceededError(
            f"spin bound N = {sys.N} exceeds the limit {ENUMERATION_LIMITS['max_spin_bound']}"
        )


def has_connected_support(sys: SpinSystem, polymer: Polymer) -> bool:
    """Whether the interacting pairs of R connect all of R"""
    sites = polymer.sites
    edges = [(i, j) for i, j in vertex_pairs(len(sites))
             if sys.potential.interacts(sites[i - 1], sites[j - 1])]
    return is_connected(len(sites), edges, offset=1)


def _pair_tables(sys: SpinSystem, polymer: Polymer) -> np.ndarray:
    """Potential tables for the pairs of R, shape (C(n,2), 2N+1, 2N+1)"""
    sites = polymer.sites
    tables = np.stack([sys.potential.pair_table(sites[i - 1], sites[j - 1], sys.N)
                       for i, j in vertex_pairs(len(sites))])
    zero = sys.N
    if np.any(tables[:, zero, :] != 0.0) or np.any(tables[:, :, zero] != 0.0):
        raise AssumptionViolationError(
            f"potential does not vanish on zero spins inside polymer {polymer.sites}"
        )
    return tables


def activity(sys: SpinSystem, polymer: Polymer, include_zero_spins: bool = False) -> float:
    """zeta(R) = w^-|R| sum_{s_R nonzero} exp(-beta D sum s^2) * (connected-graph sum)

    w is the single-site weight and the connected-graph sum carries the
    weights v_{x,y} = beta V(x, y, s_x, s_y). With include_zero_spins the sum
    runs over every configuration, which gives the same value under
    assumption A.
    """
    size = len(polymer)
    check_activity_budget(sys, size)
    tables = _pair_tables(sys, polymer)
    if not has_connected_support(sys, polymer):
        return 0.0
    spins = sys.spin_values if include_zero_spins else sys.nonzero_spins
    configs = np.array(list(itertools.product(spins, repeat=size)), dtype=np.int64)
    offset = sys.N
    v = np.stack([sys.beta * tables[k, configs[:, i - 1] + offset, configs[:, j - 1] + offset]
                  for k, (i, j) in enumerate(vertex_pairs(size))], axis=1)
    connected = connected_sum_batch(size, np.expm1(-v))
    field = np.exp(-sys.beta * sys.D * np.sum(configs * configs, axis=1))
    zeta = float(np.sum(field * connected)) / single_site_weight(sys) ** size
    logger.debug("zeta(%s) = %.17g", polymer.sites, zeta)
    return zeta


def tree_graph_activity_bound(sys: SpinSystem, polymer: Polymer) -> float:
    """(2N lambda~ exp(beta J))^|R| sum_tau prod_{tau} (1 - exp(-beta J(x, y)))"""
    size = len(polymer)
    sites = polymer.sites
    saturated = np.array([-math.expm1(-sys.beta * sys.coupling(sites[i - 1], sites[j - 1]))
                          for i, j in vertex_pairs(size)])
    tree_sum = float(np.prod(np.where(tree_matrix(size), saturated[None, :], 1.0), axis=1).sum())
    if tree_sum == 0.0:
        return 0.0
    log_bound = size * log_activity_scale(sys) + math.log(tree_sum)
    return math.exp(log_bound) if log_bound < 709 else math.inf
