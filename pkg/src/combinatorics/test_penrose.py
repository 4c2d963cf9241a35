"""Tests for the Penrose map and the connected-graph sums."""
import itertools
import math

import numpy as np
import pytest

from src.errors import StabilityBoundError
from .graphs import EdgeTree, connected_graphs, vertex_pairs
from .penrose import generations, penrose_graph, penrose_interval
from .trees import trees
from .ursell import (
    EdgeWeights, connected_sum_batch, tree_graph_bound, ursell_sum, ursell_sum_penrose
)


def relative_gap(first, second):
    """Relative difference, absolute below magnitude one"""
    return abs(first - second) / max(abs(first), abs(second), 1.0)


class TestGenerations:
    """Test generations and parents."""

    def test_path(self):
        """Depth along a path from its end."""
        depth, parent = generations(EdgeTree(3, frozenset({(1, 2), (2, 3)})))
        assert depth == {1: 0, 2: 1, 3: 2}
        assert parent == {2: 1, 3: 2}


class TestPenroseGraph:
    """Test the Penrose map."""

    def test_star_adds_sibling_edge(self):
        """Two children of the root are joined."""
        tree = EdgeTree(3, frozenset({(1, 2), (1, 3)}))
        assert penrose_graph(tree).edges == frozenset({(1, 2), (1, 3), (2, 3)})

    def test_path_from_end_unchanged(self):
        """A path rooted at an end adds nothing."""
        tree = EdgeTree(3, frozenset({(1, 2), (2, 3)}))
        assert penrose_graph(tree).edges == tree.edges
        assert not penrose_interval(tree).edges

    def test_path_from_middle(self):
        """Rooted in the middle, both ends share a generation."""
        tree = EdgeTree(3, frozenset({(1, 2), (2, 3)}), root=2)
        assert (1, 3) in penrose_graph(tree).edges

    def test_uncle_rule(self):
        """An uncle is joined only when labelled above the parent."""
        # root 1 with children 2 and 3; 4 hangs below 2, 5 hangs below 3
        tree = EdgeTree(5, frozenset({(1, 2), (1, 3), (2, 4), (3, 5)}))
        extra = penrose_interval(tree).edges
        assert (3, 4) in extra
        assert (2, 5) not in extra
        assert (4, 5) in extra

    def test_two_vertices(self):
        """On two vertices p(tau) = tau."""
        tree = EdgeTree(2, frozenset({(1, 2)}))
        assert penrose_graph(tree).edges == tree.edges

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_contains_tree(self, n):
        """p(tau) always contains tau and is connected."""
        for tree in trees(n, root=n):
            image = penrose_graph(tree)
            assert tree.edges <= image.edges
            assert image.is_connected()
            assert len(image.edges) <= n * (n - 1) // 2

    def test_bad_labels(self):
        """Labels must be a bijection on the vertices."""
        tree = EdgeTree(3, frozenset({(1, 2), (2, 3)}))
        with pytest.raises(ValueError):
            penrose_graph(tree, {1: 1, 2: 1, 3: 3})


class TestUrsellSum:
    """Test connected-graph sums."""

    def test_two_vertices(self):
        """Single edge factor."""
        w = EdgeWeights.constant(2, 0.4)
        assert ursell_sum(2, w) == pytest.approx(math.expm1(-0.4))
        assert ursell_sum_penrose(2, w) == pytest.approx(math.expm1(-0.4))

    def test_three_equal_weights(self):
        """3 f^2 + f^3 for constant weights."""
        f = math.expm1(-0.3)
        w = EdgeWeights.constant(3, 0.3)
        assert ursell_sum(3, w) == pytest.approx(3 * f ** 2 + f ** 3, rel=1e-12)
        assert ursell_sum_penrose(3, w) == pytest.approx(3 * f ** 2 + f ** 3, rel=1e-12)

    def test_hard_core(self):
        """Infinite weights reduce to the signed connected-graph count."""
        w = EdgeWeights.constant(3, math.inf)
        assert ursell_sum(3, w).real == pytest.approx(2.0)

    def test_complex_weights(self):
        """The identity holds for complex weights too."""
        w = EdgeWeights.from_function(4, lambda i, j: 0.3 * i - 0.2j * j)
        assert relative_gap(ursell_sum(4, w), ursell_sum_penrose(4, w)) < 1e-10

    def test_weights_size_checked(self):
        """Weights must match the vertex count."""
        with pytest.raises(ValueError):
            ursell_sum(3, EdgeWeights.constant(2, 0.1))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_penrose_identity_all_roots_and_labelings(self, n, random_weights):
        """Tree form equals the direct sum for every root and two labelings."""
        reversed_labels = {v: n + 1 - v for v in range(1, n + 1)}
        for _ in range(20):
            w = random_weights(n)
            direct = ursell_sum(n, w)
            for labels in (None, reversed_labels):
                for root in range(1, n + 1):
                    assert relative_gap(direct, ursell_sum_penrose(n, w, labels, root)) < 1e-10

    def test_label_invariance(self, random_weights):
        """Relabeling the vertices leaves the sum unchanged."""
        w = random_weights(5)
        permutation = {1: 3, 2: 5, 3: 1, 4: 2, 5: 4}
        assert relative_gap(ursell_sum(5, w), ursell_sum(5, w.relabeled(permutation))) < 1e-10


class TestConnectedSumBatch:
    """Test the batched subset recursion."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_matches_enumeration(self, n, rng):
        """Batch sums agree with the direct graph enumeration."""
        v = rng.uniform(-1, 1, (8, len(vertex_pairs(n))))
        batch = connected_sum_batch(n, np.expm1(-v))
        for row, values in zip(batch, v):
            expected = ursell_sum(n, EdgeWeights(n, tuple(values))).real
            assert row == pytest.approx(expected, rel=1e-10, abs=1e-12)

    def test_disconnected_weights(self):
        """Zero factors on a cut give zero."""
        factors = np.array([[0.5, 0.0, 0.0]])  # only the edge {1, 2}
        assert connected_sum_batch(3, factors)[0] == pytest.approx(0.0)


class TestTreeGraphBound:
    """Test the tree-graph inequality."""

    def test_two_vertices(self):
        """|e^-v - 1| <= e^{2B}(1 - e^-|v|) with B = |v| / 2."""
        lhs, rhs = tree_graph_bound(2, EdgeWeights.constant(2, 0.7), 0.35)
        assert lhs == pytest.approx(-math.expm1(-0.7))
        assert rhs == pytest.approx(math.expm1(0.7))
        assert lhs <= rhs

    def test_zero_weights(self):
        """Vanishing weights give (0, 0)."""
        assert tree_graph_bound(4, EdgeWeights.constant(4, 0.0), 0.0) == (0.0, 0.0)

    def test_stability_enforced(self):
        """B below the stability constant is refused."""
        w = EdgeWeights.constant(3, 1.0)
        assert w.stability_constant() == pytest.approx(1.0)
        with pytest.raises(StabilityBoundError):
            tree_graph_bound(3, w, 0.5)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_random_instances(self, n, random_weights):
        """lhs <= rhs on random stable weights."""
        for _ in range(25):
            w = random_weights(n, scale=2.0)
            lhs, rhs = tree_graph_bound(n, w, w.stability_constant())
            assert lhs <= rhs * (1 + 1e-12)


class TestEdgeWeights:
    """Test edge weight containers."""

    def test_from_mapping(self):
        """Mappings must cover every pair."""
        w = EdgeWeights.from_mapping(3, {(2, 1): 0.1, (1, 3): 0.2, (2, 3): 0.3})
        assert w[(1, 2)] == 0.1
        assert w[(3, 2)] == 0.3
        with pytest.raises(ValueError):
            EdgeWeights.from_mapping(3, {(1, 2): 0.1})

    def test_wrong_length(self):
        """C(n, 2) values are needed."""
        with pytest.raises(ValueError):
            EdgeWeights(3, (0.1, 0.2))

    def test_relabeled(self):
        """Relabeling moves weights with their endpoints."""
        w = EdgeWeights.from_mapping(3, {(1, 2): 1.0, (1, 3): 2.0, (2, 3): 3.0})
        moved = w.relabeled({1: 3, 2: 2, 3: 1})
        assert moved[(2, 3)] == 1.0
        assert moved[(1, 3)] == 2.0
        assert moved[(1, 2)] == 3.0


class TestPenrosePartition:
    """Test that Penrose intervals partition the connected graphs."""

    def test_partition_on_four_vertices(self):
        """Intervals [tau, p(tau)] cover every connected graph exactly once."""
        covered = []
        for tree in trees(4):
            extra = sorted(penrose_interval(tree).edges)
            for k in range(len(extra) + 1):
                for chosen in itertools.combinations(extra, k):
                    covered.append(tree.edges | frozenset(chosen))
        assert len(covered) == len(set(covered))
        assert set(covered) == {g.edges for g in connected_graphs(4)}
