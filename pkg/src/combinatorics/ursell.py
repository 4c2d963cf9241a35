"""Connected-graph (Ursell) sums, their Penrose tree form and the tree-graph bound."""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Mapping, Optional, Tuple, Union

import numpy as np

from src.config import TOLERANCES
from src.errors import StabilityBoundError
from .graphs import Edge, check_graph_budget, connected_graph_matrix, pair_index, vertex_pairs
from .penrose import check_labels, penrose_matrices
from .trees import check_tree_budget, tree_matrix

logger = logging.getLogger(__name__)

Number = Union[float, complex]


@dataclass(frozen=True)
class EdgeWeights:
    """Weights v_{i,j} on every unordered pair of {1..n}"""
    n: int
    values: Tuple[Number, ...]

    def __post_init__(self):
        expected = len(vertex_pairs(self.n))
        if len(self.values) != expected:
            raise ValueError(f"{self.n} vertices need {expected} pair weights")

    @classmethod
    def from_mapping(cls, n: int, weights: Mapping[Edge, Number]) -> 'EdgeWeights':
        """Build from a {(i, j): v} mapping that covers every pair"""
        normalized: Dict[Edge, Number] = {}
        for (i, j), value in weights.items():
            normalized[(min(i, j), max(i, j))] = value
        missing = [pair for pair in vertex_pairs(n) if pair not in normalized]
        if missing:
            raise ValueError(f"weights undefined on pairs {missing}")
        return cls(n, tuple(normalized[pair] for pair in vertex_pairs(n)))

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], Number]) -> 'EdgeWeights':
        """v_{i,j} = fn(i, j) for i < j"""
        return cls(n, tuple(fn(i, j) for i, j in vertex_pairs(n)))

    @classmethod
    def constant(cls, n: int, value: Number) -> 'EdgeWeights':
        """The same weight on every pair"""
        return cls(n, (value,) * len(vertex_pairs(n)))

    def array(self) -> np.ndarray:
        """Weights in vertex_pairs order"""
        return np.asarray(self.values)

    def __getitem__(self, edge: Edge) -> Number:
        i, j = sorted(edge)
        return self.values[pair_index(self.n)[(i, j)]]

    def stability_constant(self) -> float:
        """Smallest B with sup_i sum_{j != i} |v_{i,j}| <= 2B"""
        totals = np.zeros(self.n)
        for (i, j), value in zip(vertex_pairs(self.n), self.values):
            totals[i - 1] += abs(value)
            totals[j - 1] += abs(value)
        return 0.5 * float(totals.max())

    def relabeled(self, permutation: Mapping[int, int]) -> 'EdgeWeights':
        """Weights seen after renaming vertex v to permutation[v]"""
        moved = {}
        for (i, j), value in zip(vertex_pairs(self.n), self.values):
            a, b = permutation[i], permutation[j]
            moved[(min(a, b), max(a, b))] = value
        return EdgeWeights.from_mapping(self.n, moved)


def _mayer_factors(w: EdgeWeights) -> np.ndarray:
    return np.expm1(-w.array())


def _row_products(matrix: np.ndarray, factors: np.ndarray) -> np.ndarray:
    return np.prod(np.where(matrix, factors[None, :], 1), axis=1)


def ursell_sum(n: int, w: EdgeWeights) -> complex:
    """sum over connected g on {1..n} of prod_{edges} (exp(-v) - 1), by direct enumeration"""
    check_graph_budget(n)
    if w.n != n:
        raise ValueError(f"weights are for {w.n} vertices, not {n}")
    total = _row_products(connected_graph_matrix(n), _mayer_factors(w)).sum()
    return complex(total)


def ursell_sum_penrose(
    n: int, w: EdgeWeights, labels: Optional[Mapping[int, int]] = None, root: int = 1
) -> complex:
    """Tree form of the connected-graph sum:

    sum over trees tau of prod_{tau} (exp(-v) - 1) * exp(-sum_{p(tau) minus tau} v)
    """
    check_graph_budget(n)
    check_tree_budget(n)
    if w.n != n:
        raise ValueError(f"weights are for {w.n} vertices, not {n}")
    label_order = None
    if labels is not None:
        check_labels(n, labels)
        label_order = tuple(labels[v] for v in range(1, n + 1))
    tree_rows, extra_rows = penrose_matrices(n, root, label_order)
    v = w.array()
    tree_part = _row_products(tree_rows, np.expm1(-v))
    extra = np.where(extra_rows, v[None, :], 0).sum(axis=1)
    return complex(np.sum(tree_part * np.exp(-extra)))


def tree_graph_bound(n: int, w: EdgeWeights, B: float) -> Tuple[float, float]:  # pylint: disable=invalid-name
    """(|connected-graph sum|, exp(B n) sum_tau prod_{tau} (1 - exp(-|v|)))"""
    if B < 0:
        raise ValueError("stability constant must be nonnegative")
    needed = w.stability_constant()
    if needed > B * (1 + TOLERANCES['identity_rel']):
        raise StabilityBoundError(
            f"weights need B >= {needed:.6g}, but B = {B:.6g} was supplied"
        )
    lhs = abs(ursell_sum(n, w))
    tree_part = _row_products(tree_matrix(n), -np.expm1(-np.abs(w.array())))
    rhs = float(np.exp(B * n) * tree_part.sum())
    return float(lhs), rhs


def connected_sum_batch(n: int, factors: np.ndarray) -> np.ndarray:
    """Connected-graph sums for many weight sets at once.

    factors has shape (batch, C(n, 2)) holding exp(-v) - 1 in vertex_pairs
    order. Uses C(S) = A(S) - sum_{T < S, T owns min S} C(T) A(S - T) with
    A(S) = prod_{pairs in S} (1 + f), restricted to sets holding vertex 1.
    """
    check_graph_budget(n)
    factors = np.atleast_2d(factors)
    index = pair_index(n)
    full = (1 << n) - 1
    everything = [np.ones(factors.shape[0], dtype=factors.dtype)] * (1 << n)
    for mask in range(1, 1 << n):
        high = mask.bit_length() - 1
        rest = mask & ~(1 << high)
        product = everything[rest]
        for low in range(high):
            if rest >> low & 1:
                product = product * (1 + factors[:, index[(low + 1, high + 1)]])
        everything[mask] = product
    connected = {}
    for mask in range(1, full + 1, 2):
        value = everything[mask]
        # proper subsets of mask that contain vertex 1
        sub = (mask - 1) & mask
        while sub:
            if sub & 1:
                value = value - connected[sub] * everything[mask & ~sub]
            sub = (sub - 1) & mask
        connected[mask] = value
    return connected[full]
