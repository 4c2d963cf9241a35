"""Dominating coupling functions J(x, y) and their sup-sums.

The sup over a countable site set is not computable, so every sum is a
finite window sum plus a declared tail bound. Translation-invariant lattice
couplings sum over the window [-R, R]^d around the origin; abstract
couplings sum over an explicit finite support.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional, Tuple

import numpy as np

from src.errors import DivergentCouplingError, MissingTailCertificateError
from .lattice import Site, euclidean, manhattan

logger = logging.getLogger(__name__)

CouplingFn = Callable[[Site, Site], float]


@dataclass(frozen=True)
class TailCertificate:
    """Window half-width (sup-norm) and a bound on the coupling mass beyond it"""
    radius: int
    bound: float

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("tail certificate radius must be at least 1")
        if self.bound < 0 or not math.isfinite(self.bound):
            raise ValueError("tail bound must be a finite nonnegative number")


@dataclass(frozen=True)
class CouplingBound:
    """Pointwise bound J(x, y) >= |V(x, y, ., .)| with its sup-sum"""
    j_fn: CouplingFn
    descriptor: str = 'tabulated'
    dimension: Optional[int] = None
    tail: Optional[TailCertificate] = None
    infinite_range: bool = False
    support: Optional[Tuple[Site, ...]] = None

    def __call__(self, x: Site, y: Site) -> float:
        if tuple(x) == tuple(y):
            return 0.0
        return float(self.j_fn(x, y))

    def _require_tail(self) -> TailCertificate:
        if self.tail is None:
            if self.infinite_range:
                raise MissingTailCertificateError(
                    f"coupling {self.descriptor} has infinite range but no tail certificate"
                )
            raise MissingTailCertificateError(
                f"coupling {self.descriptor} declares no summation window"
            )
        return self.tail

    @cached_property
    def window_values(self) -> np.ndarray:
        """J values, one row per base site, over the summation window"""
        if self.support is not None:
            sites = self.support
            values = np.array([[self(x, y) for y in sites] for x in sites], dtype=float)
            if self.infinite_range:
                self._require_tail()
            return values
        if self.dimension is None:
            raise MissingTailCertificateError(
                f"coupling {self.descriptor} has neither a lattice nor a finite support"
            )
        radius = self._require_tail().radius
        origin = (0,) * self.dimension
        offsets = itertools.product(range(-radius, radius + 1), repeat=self.dimension)
        row = [self(origin, offset) for offset in offsets if offset != origin]
        return np.array([row], dtype=float)

    @property
    def tail_bound(self) -> float:
        """Coupling mass outside the window (zero when nothing is declared)"""
        return self.tail.bound if self.tail is not None else 0.0

    def sup_sum(self) -> float:
        """sup_x sum_{y != x} J(x, y), i.e. 2J"""
        return float(self.window_values.sum(axis=1).max()) + self.tail_bound

    def saturated_sup_sum(self, beta: float) -> float:
        """sup_x sum_{y != x} (1 - exp(-beta J(x, y)))

        The tail uses 1 - exp(-beta J) <= beta J.
        """
        if beta == 0:
            return 0.0
        saturated = -np.expm1(-beta * self.window_values)
        return float(saturated.sum(axis=1).max()) + beta * self.tail_bound

    @cached_property
    def J(self) -> float:  # pylint: disable=invalid-name
        """Half the sup-sum"""
        return 0.5 * self.sup_sum()


def nearest_neighbor_coupling(j0: float, dimension: int) -> CouplingBound:
    """J(x, y) = j0 on nearest neighbours of Z^d, zero otherwise"""
    if j0 < 0:
        raise ValueError("coupling strength must be nonnegative")
    return CouplingBound(
        j_fn=lambda x, y: j0 if manhattan(x, y) == 1 else 0.0,
        descriptor=f"nearest_neighbor(J0={j0}, d={dimension})",
        dimension=dimension,
        tail=TailCertificate(radius=1, bound=0.0),
    )


def power_law_tail_bound(amplitude: float, epsilon: float, dimension: int, radius: int) -> float:
    """Bound on sum_{|y|_inf > R} amplitude / |y|^(d + epsilon)

    Shell m holds at most 2d (3m)^(d-1) points, each at Euclidean distance
    at least m, and sum_{m > R} m^(-1-eps) <= R^(-eps) / eps.
    """
    if epsilon <= 0:
        raise DivergentCouplingError(
            f"power-law decay 1/r^(d+{epsilon}) is not summable: tail sum diverges"
        )
    return 2 * dimension * 3 ** (dimension - 1) * abs(amplitude) * radius ** (-epsilon) / epsilon


def power_law_coupling(
    amplitude: float, epsilon: float, dimension: int, radius: Optional[int]
) -> CouplingBound:
    """J(x, y) = amplitude / |x - y|^(d + epsilon) with an integral tail certificate"""
    if epsilon <= 0:
        raise DivergentCouplingError(
            f"power-law decay 1/r^(d+{epsilon}) is not summable: tail sum diverges"
        )
    exponent = dimension + epsilon
    tail = None
    if radius is not None:
        tail = TailCertificate(
            radius=radius,
            bound=power_law_tail_bound(amplitude, epsilon, dimension, radius),
        )
    return CouplingBound(
        j_fn=lambda x, y: abs(amplitude) / euclidean(x, y) ** exponent,
        descriptor=f"power_law(A={amplitude}, epsilon={epsilon}, d={dimension})",
        dimension=dimension,
        tail=tail,
        infinite_range=True,
    )


def tabulated_coupling(
    j_fn: CouplingFn, support: Tuple[Site, ...], tail: Optional[TailCertificate] = None
) -> CouplingBound:
    """Coupling on an abstract finite support"""
    return CouplingBound(
        j_fn=j_fn,
        descriptor='tabulated',
        support=tuple(tuple(site) for site in support),
        tail=tail,
    )
