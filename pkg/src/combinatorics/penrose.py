"""The Penrose map p(tau) on rooted labelled trees.

Generations are graph distances from the root in the tree. p(tau) adds to
tau every pair of vertices in the same generation, and every pair joining a
non-root vertex x to a vertex of the previous generation whose label exceeds
the label of x's parent.
"""
import logging
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

import networkx as nx
import numpy as np

from .graphs import EdgeGraph, EdgeTree, pair_index, vertex_pairs
from .trees import tree_edge_lists, check_tree_budget

logger = logging.getLogger(__name__)


def identity_labels(n: int) -> Dict[int, int]:
    """Label every vertex by itself"""
    return {v: v for v in range(1, n + 1)}


def check_labels(n: int, labels: Mapping[int, int]):
    if set(labels) != set(range(1, n + 1)):
        raise ValueError(f"labels must cover exactly the vertices 1..{n}")
    if len(set(labels.values())) != n:
        raise ValueError("labels must be distinct")


def generations(t: EdgeTree) -> Tuple[Dict[int, int], Dict[int, int]]:
    """(generation, parent) of every vertex of a rooted tree"""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, t.n + 1))
    graph.add_edges_from(t.edges)
    depth = nx.single_source_shortest_path_length(graph, t.root)
    parent = {}
    for v in graph.nodes:
        for u in graph.neighbors(v):
            if depth[u] == depth[v] - 1:
                parent[v] = u
    return depth, parent


def penrose_graph(t: EdgeTree, labels: Optional[Mapping[int, int]] = None) -> EdgeGraph:
    """p(tau): tau plus sibling edges and edges to uncles labelled above the parent"""
    labels = labels or identity_labels(t.n)
    check_labels(t.n, labels)
    depth, parent = generations(t)
    edges = set(t.edges)
    vertices = sorted(depth)
    for x in vertices:
        if x == t.root:
            continue
        for y in vertices:
            if y == x:
                continue
            if depth[y] == depth[x]:
                edges.add((min(x, y), max(x, y)))
            elif (depth[y] == depth[x] - 1 and y != parent[x]
                  and labels[y] > labels[parent[x]]):
                edges.add((min(x, y), max(x, y)))
    return EdgeGraph(t.n, frozenset(edges))


def penrose_interval(t: EdgeTree, labels: Optional[Mapping[int, int]] = None) -> EdgeGraph:
    """The edges p(tau) adds to tau"""
    full = penrose_graph(t, labels)
    return EdgeGraph(t.n, full.edges - t.edges)


@lru_cache(maxsize=None)
def penrose_matrices(
    n: int, root: int = 1, label_order: Optional[Tuple[int, ...]] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """Edge indicators of every tree and of the edges p(tau) adds to it

    label_order[k] is the label of vertex k + 1; None means identity.
    """
    check_tree_budget(n)
    labels = (identity_labels(n) if label_order is None
              else {v: label_order[v - 1] for v in range(1, n + 1)})
    index = pair_index(n)
    edge_lists = tree_edge_lists(n)
    tree_rows = np.zeros((len(edge_lists), len(vertex_pairs(n))), dtype=bool)
    extra_rows = np.zeros_like(tree_rows)
    for row, edges in enumerate(edge_lists):
        tree = EdgeTree(n, frozenset(edges), root)
        for edge in edges:
            tree_rows[row, index[edge]] = True
        for edge in penrose_interval(tree, labels).edges:
            extra_rows[row, index[edge]] = True
    tree_rows.setflags(write=False)
    extra_rows.setflags(write=False)
    return tree_rows, extra_rows
