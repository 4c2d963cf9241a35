"""Test fixtures for convergence tests."""
import pytest

from src.model import SpinSystem, TabulatedPotential, manhattan, nearest_neighbor_coupling


def nn_system(N, D, beta=1.0, j0=1.0, d=1):  # pylint: disable=invalid-name
    """Nearest-neighbour product model -j0 s s' / N^2 with J(x, y) = j0"""
    return SpinSystem(
        d=d, N=N, D=D, beta=beta,
        potential=TabulatedPotential(lambda x, y, sx, sy: -j0 * sx * sy / (N * N),
                                     support=lambda x, y: manhattan(x, y) == 1),
        coupling=nearest_neighbor_coupling(j0, d),
    )


@pytest.fixture
def make_nn_system():
    """Builder for nearest-neighbour systems on Z^d"""
    return nn_system
