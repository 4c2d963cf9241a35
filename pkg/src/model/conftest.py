"""Test fixtures for model tests."""
import pytest

from src.model import Volume, beg_system


@pytest.fixture
def beg_chain_system():
    """BEG system V=1, K=0.5, D=1.5 at beta=0.7 on Z^1"""
    return beg_system(V=1.0, K=0.5, D=1.5, beta=0.7)


@pytest.fixture
def chain3():
    """Three-site chain"""
    return Volume.chain(3)


@pytest.fixture
def box2x2():
    """2x2 box in Z^2"""
    return Volume.box(2, 2)
