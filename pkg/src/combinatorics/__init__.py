"""Graph and tree enumeration, the Penrose map and connected-graph sums."""
from .union_find import UnionFind, is_connected
from .graphs import (
    EdgeGraph, EdgeTree, connected_graph_matrix, connected_graphs, pair_index, vertex_pairs
)
from .trees import prufer_decode, tree_matrix, trees
from .penrose import generations, identity_labels, penrose_graph, penrose_interval
from .ursell import (
    EdgeWeights, connected_sum_batch, tree_graph_bound, ursell_sum, ursell_sum_penrose
)

__all__ = [
    'UnionFind', 'is_connected',
    'EdgeGraph', 'EdgeTree', 'connected_graph_matrix', 'connected_graphs', 'pair_index',
    'vertex_pairs',
    'prufer_decode', 'tree_matrix', 'trees',
    'generations', 'identity_labels', 'penrose_graph', 'penrose_interval',
    'EdgeWeights', 'connected_sum_batch', 'tree_graph_bound', 'ursell_sum',
    'ursell_sum_penrose',
]
