"""Test fixtures for combinatorics tests."""
import numpy as np
import pytest

from src.combinatorics import EdgeWeights


@pytest.fixture
def rng():
    """Seeded generator for randomized identity tests"""
    return np.random.default_rng(20240611)


@pytest.fixture
def random_weights(rng):
    """Factory of uniform weights in [-scale, scale] on n vertices"""
    def make(n, scale=1.0):
        return EdgeWeights(n, tuple(rng.uniform(-scale, scale, n * (n - 1) // 2)))
    return make
