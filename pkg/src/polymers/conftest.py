"""Test fixtures for polymer tests."""
import pytest

from src.model import SpinSystem, TabulatedPotential, Volume, beg_system, nearest_neighbor_coupling


@pytest.fixture
def beg_pair_system():
    """BEG V=1, K=0, D=2 at beta=1"""
    return beg_system(V=1.0, K=0.0, D=2.0, beta=1.0)


@pytest.fixture
def spin_two_system():
    """N=2 nearest-neighbour product coupling -s s' / 4 on Z^1"""
    return SpinSystem(
        d=1, N=2, D=1.2, beta=0.6,
        potential=TabulatedPotential(lambda x, y, sx, sy: -0.25 * sx * sy,
                                     support=lambda x, y: abs(x[0] - y[0]) == 1),
        coupling=nearest_neighbor_coupling(1.0, 1),
    )


@pytest.fixture
def chain4():
    """Four-site chain"""
    return Volume.chain(4)
