"""Labelled graphs on {1..n} and enumeration of the connected ones.

Connected graphs are found by filtering all 2^C(n,2) edge subsets with a
union-find check.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, Tuple

import numpy as np

from src.config import ENUMERATION_LIMITS
from src.errors import BudgetExceededError
from .union_find import UnionFind, is_connected

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _normalize_edges(n: int, edges) -> FrozenSet[Edge]:
    normalized = set()
    for edge in edges:
        i, j = sorted(edge)
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if i < 1 or j > n:
            raise ValueError(f"edge {(i, j)} outside vertex set 1..{n}")
        normalized.add((i, j))
    return frozenset(normalized)


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> Tuple[Edge, ...]:
    """Unordered pairs {i, j} of 1..n in lexicographic order"""
    return tuple(itertools.combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict:
    """Position of each pair in vertex_pairs(n)"""
    return {pair: k for k, pair in enumerate(vertex_pairs(n))}


@dataclass(frozen=True)
class EdgeGraph:
    """Simple graph on the vertex set {1..n}"""
    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        object.__setattr__(self, 'edges', _normalize_edges(self.n, self.edges))

    def is_connected(self) -> bool:
        """Whether the graph is connected"""
        return is_connected(self.n, self.edges, offset=1)

    def mask(self) -> np.ndarray:
        """Boolean indicator over vertex_pairs(n)"""
        index = pair_index(self.n)
        indicator = np.zeros(len(vertex_pairs(self.n)), dtype=bool)
        for edge in self.edges:
            indicator[index[edge]] = True
        return indicator


@dataclass(frozen=True)
class EdgeTree(EdgeGraph):
    """Spanning tree on {1..n} with a designated root"""
    root: int = 1

    def __post_init__(self):
        super().__post_init__()
        if not 1 <= self.root <= self.n:
            raise ValueError(f"root {self.root} outside 1..{self.n}")
        if len(self.edges) != self.n - 1:
            raise ValueError(f"a tree on {self.n} vertices has {self.n - 1} edges")
        forest = UnionFind(self.n)
        for i, j in self.edges:
            if not forest.union(i - 1, j - 1):
                raise ValueError(f"edge {(i, j)} closes a cycle")

    def rerooted(self, root: int) -> 'EdgeTree':
        """Same tree with another root"""
        return EdgeTree(self.n, self.edges, root)


def check_graph_budget(n: int):
    """Validate 2 <= n <= max_graph_vertices"""
    limit = ENUMERATION_LIMITS['max_graph_vertices']
    if n < 2:
        raise ValueError(f"connected-graph sums need at least 2 vertices, got {n}")
    if n > limit:
        raise BudgetExceededError(
            f"2^{n * (n - 1) // 2} edge subsets on {n} vertices exceed the limit n <= {limit}"
        )


@lru_cache(maxsize=None)
def _connected_subsets(n: int) -> Tuple[int, ...]:
    """Bitmasks over vertex_pairs(n) of every connected spanning edge set"""
    pairs = vertex_pairs(n)
    connected = []
    for subset in range(1 << len(pairs)):
        # a connected graph on n vertices needs n - 1 edges
        if bin(subset).count('1') < n - 1:
            continue
        forest = UnionFind(n)
        bits = subset
        k = 0
        while bits and forest.components > 1:
            if bits & 1:
                i, j = pairs[k]
                forest.union(i - 1, j - 1)
            bits >>= 1
            k += 1
        if forest.components == 1:
            connected.append(subset)
    logger.debug("Enumerated %d connected graphs on %d vertices", len(connected), n)
    return tuple(connected)


def connected_graphs(n: int) -> Iterator[EdgeGraph]:
    """Every connected graph on {1..n}, exactly once"""
    check_graph_budget(n)
    pairs = vertex_pairs(n)
    for subset in _connected_subsets(n):
        yield EdgeGraph(n, frozenset(pairs[k] for k in range(len(pairs)) if subset >> k & 1))


@lru_cache(maxsize=None)
def connected_graph_matrix(n: int) -> np.ndarray:
    """Rows are edge indicators (over vertex_pairs(n)) of the connected graphs on {1..n}"""
    check_graph_budget(n)
    subsets = np.array(_connected_subsets(n), dtype=np.int64)
    bits = np.arange(len(vertex_pairs(n)), dtype=np.int64)
    matrix = (subsets[:, None] >> bits[None, :]) & 1
    matrix = matrix.astype(bool)
    matrix.setflags(write=False)
    return matrix
