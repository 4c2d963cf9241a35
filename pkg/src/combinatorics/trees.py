"""Labelled trees on {1..n} via Pruefer sequences (Cayley: n^(n-2) of them)."""
import heapq
import itertools
import logging
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from src.config import ENUMERATION_LIMITS
from src.errors import BudgetExceededError
from .graphs import Edge, EdgeTree, pair_index, vertex_pairs

logger = logging.getLogger(__name__)


def check_tree_budget(n: int):
    """Validate 2 <= n <= max_tree_vertices"""
    limit = ENUMERATION_LIMITS['max_tree_vertices']
    if n < 2:
        raise ValueError(f"tree sums need at least 2 vertices, got {n}")
    if n > limit:
        raise BudgetExceededError(f"{n}^{n - 2} trees exceed the limit n <= {limit}")


def prufer_decode(sequence: Sequence[int], n: int) -> List[Edge]:
    """Edges of the labelled tree on {1..n} encoded by a Pruefer sequence of length n-2"""
    if len(sequence) != n - 2:
        raise ValueError(f"a Pruefer sequence for {n} vertices has length {n - 2}")
    degree = [1] * (n + 1)
    for v in sequence:
        if not 1 <= v <= n:
            raise ValueError(f"Pruefer entry {v} outside 1..{n}")
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    last, other = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(last, other), max(last, other)))
    return edges


@lru_cache(maxsize=None)
def tree_edge_lists(n: int) -> Tuple[Tuple[Edge, ...], ...]:
    edge_lists = tuple(
        tuple(sorted(prufer_decode(sequence, n)))
        for sequence in itertools.product(range(1, n + 1), repeat=n - 2)
    )
    logger.debug("Decoded %d trees on %d vertices", len(edge_lists), n)
    return edge_lists


def trees(n: int, root: int = 1) -> Iterator[EdgeTree]:
    """Every labelled tree on {1..n}, exactly once, rooted at `root`"""
    check_tree_budget(n)
    for edges in tree_edge_lists(n):
        yield EdgeTree(n, frozenset(edges), root)


@lru_cache(maxsize=None)
def tree_matrix(n: int) -> np.ndarray:
    """Rows are edge indicators (over vertex_pairs(n)) of the labelled trees on {1..n}"""
    check_tree_budget(n)
    index = pair_index(n)
    edge_lists = tree_edge_lists(n)
    matrix = np.zeros((len(edge_lists), len(vertex_pairs(n))), dtype=bool)
    for row, edges in enumerate(edge_lists):
        for edge in edges:
            matrix[row, index[edge]] = True
    matrix.setflags(write=False)
    return matrix
