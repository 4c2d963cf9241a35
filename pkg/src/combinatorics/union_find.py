"""Disjoint-set forest used for connectivity checks."""
from typing import Iterable, Tuple


class UnionFind:
    """Union-find over elements 0..size-1 with union by rank and path halving"""

    def __init__(self, size: int):
        if size < 0:
            raise ValueError("number of elements must be non-negative")
        self.parents = list(range(size))
        self.ranks = [0] * size
        self.components = size

    def find(self, element: int) -> int:
        """Representative of the set holding element"""
        parents = self.parents
        while parents[element] != element:
            parents[element] = parents[parents[element]]
            element = parents[element]
        return element

    def union(self, first: int, second: int) -> bool:
        """Merge two sets; False when they were already the same set"""
        root0, root1 = self.find(first), self.find(second)
        if root0 == root1:
            return False
        if self.ranks[root0] < self.ranks[root1]:
            root0, root1 = root1, root0
        elif self.ranks[root0] == self.ranks[root1]:
            self.ranks[root0] += 1
        self.parents[root1] = root0
        self.components -= 1
        return True

    def connected(self, first: int, second: int) -> bool:
        """Whether two elements share a set"""
        return self.find(first) == self.find(second)


def is_connected(size: int, edges: Iterable[Tuple[int, int]], offset: int = 0) -> bool:
    """Whether the graph on `size` vertices (numbered from `offset`) is connected"""
    forest = UnionFind(size)
    for i, j in edges:
        forest.union(i - offset, j - offset)
        if forest.components == 1:
            return True
    return forest.components <= 1
