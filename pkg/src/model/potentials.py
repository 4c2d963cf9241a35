"""Pair potentials V(x, y, s_x, s_y)."""
import logging
from abc import ABC, abstractmethod
from typing import Callable, Optional

import numpy as np

from .lattice import Site, euclidean, manhattan

logger = logging.getLogger(__name__)

PotentialFn = Callable[[Site, Site, int, int], float]


class PairPotential(ABC):
    """Base class for pair potentials"""

    kind = 'abstract'

    @abstractmethod
    def __call__(self, x: Site, y: Site, sx: int, sy: int) -> float:
        """Evaluate V(x, y, s_x, s_y)"""

    def interacts(self, x: Site, y: Site) -> bool:  # pylint: disable=unused-argument
        """False only when V(x, y, ., .) vanishes identically"""
        return True

    def pair_table(self, x: Site, y: Site, spin_bound: int) -> np.ndarray:
        """Values as a (2N+1)x(2N+1) array indexed by [s_x + N, s_y + N]"""
        spins = range(-spin_bound, spin_bound + 1)
        table = np.zeros((2 * spin_bound + 1, 2 * spin_bound + 1))
        if not self.interacts(x, y):
            return table
        for i, sx in enumerate(spins):
            for j, sy in enumerate(spins):
                table[i, j] = self(x, y, sx, sy)
        return table


class BEGPotential(PairPotential):
    """Blume-Emery-Griffiths coupling -V s_x s_y + K s_x^2 s_y^2 on nearest neighbours"""

    kind = 'beg'

    def __init__(self, V: float, K: float):  # pylint: disable=invalid-name
        self.V = float(V)  # pylint: disable=invalid-name
        self.K = float(K)  # pylint: disable=invalid-name

    def interacts(self, x: Site, y: Site) -> bool:
        return manhattan(x, y) == 1

    def __call__(self, x: Site, y: Site, sx: int, sy: int) -> float:
        if not self.interacts(x, y):
            return 0.0
        return -self.V * sx * sy + self.K * sx * sx * sy * sy

    def __repr__(self):
        return f"BEGPotential(V={self.V}, K={self.K})"


class PowerLawPotential(PairPotential):
    """Long-range product coupling -C s_x s_y / |x - y|^(d + epsilon)"""

    kind = 'power_law'

    def __init__(self, C: float, epsilon: float, dimension: int):  # pylint: disable=invalid-name
        self.C = float(C)  # pylint: disable=invalid-name
        self.epsilon = float(epsilon)
        self.dimension = int(dimension)

    def interacts(self, x: Site, y: Site) -> bool:
        return tuple(x) != tuple(y) and self.C != 0.0

    def __call__(self, x: Site, y: Site, sx: int, sy: int) -> float:
        if not self.interacts(x, y):
            return 0.0
        return -self.C * sx * sy / euclidean(x, y) ** (self.dimension + self.epsilon)

    def __repr__(self):
        return f"PowerLawPotential(C={self.C}, epsilon={self.epsilon}, d={self.dimension})"


class TabulatedPotential(PairPotential):
    """Potential given by an arbitrary function of (x, y, s_x, s_y)"""

    kind = 'tabulated'

    def __init__(self, fn: PotentialFn, support: Optional[Callable[[Site, Site], bool]] = None):
        self.fn = fn
        self.support = support

    def interacts(self, x: Site, y: Site) -> bool:
        return self.support is None or bool(self.support(x, y))

    def __call__(self, x: Site, y: Site, sx: int, sy: int) -> float:
        if not self.interacts(x, y):
            return 0.0
        return float(self.fn(x, y, sx, sy))

    def __repr__(self):
        return f"TabulatedPotential({getattr(self.fn, '__name__', 'fn')})"


def zero_potential() -> TabulatedPotential:
    """The identically vanishing potential"""
    return TabulatedPotential(lambda x, y, sx, sy: 0.0, support=lambda x, y: False)
