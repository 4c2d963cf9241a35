"""Spin systems and spin configurations."""
import logging
from dataclasses import dataclass, replace
from typing import Dict, Optional, Sequence, Tuple

from .coupling import CouplingBound, nearest_neighbor_coupling, power_law_coupling
from .lattice import Site, Volume
from .potentials import BEGPotential, PairPotential, PowerLawPotential, zero_potential

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpinConfiguration:
    """Assignment of integer spins to the sites of a volume, in canonical site order"""
    volume: Volume
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != len(self.volume):
            raise ValueError(
                f"configuration has {len(values)} spins for {len(self.volume)} sites"
            )
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_mapping(cls, volume: Volume, spins: Dict[Site, int]) -> 'SpinConfiguration':
        """Build from a site -> spin mapping covering exactly the volume"""
        keys = {tuple(site) for site in spins}
        if keys != set(volume.sites):
            raise ValueError("configuration domain does not match the volume")
        return cls(volume, tuple(spins[site] for site in volume.sites))

    @classmethod
    def zeros(cls, volume: Volume) -> 'SpinConfiguration':
        """The all-zero configuration"""
        return cls(volume, (0,) * len(volume))

    def spin(self, site: Sequence[int]) -> int:
        """Spin at a site"""
        return self.values[self.volume.index(site)]

    def flipped(self) -> 'SpinConfiguration':
        """Global spin flip"""
        return SpinConfiguration(self.volume, tuple(-v for v in self.values))


@dataclass(frozen=True)
class SpinSystem:  # pylint: disable=too-many-instance-attributes
    """Bounded integer spin system with crystal field D at inverse temperature beta"""
    d: int
    N: int  # pylint: disable=invalid-name
    D: float  # pylint: disable=invalid-name
    beta: float
    potential: PairPotential
    coupling: CouplingBound

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"spin bound N must be at least 1, got {self.N}")
        if self.beta < 0:
            raise ValueError(f"inverse temperature must be nonnegative, got {self.beta}")
        if isinstance(self.potential, BEGPotential) and self.N != 1:
            raise ValueError("the BEG model is a spin-1 model (N = 1)")

    @property
    def J(self) -> float:  # pylint: disable=invalid-name
        """Half the sup-sum of the dominating coupling"""
        return self.coupling.J

    @property
    def spin_values(self) -> Tuple[int, ...]:
        """All admissible spins -N..N"""
        return tuple(range(-self.N, self.N + 1))

    @property
    def nonzero_spins(self) -> Tuple[int, ...]:
        """Spins different from zero"""
        return tuple(s for s in self.spin_values if s != 0)

    def with_beta(self, beta: float) -> 'SpinSystem':
        """Same system at another inverse temperature"""
        return replace(self, beta=float(beta))

    def describe(self) -> Dict[str, object]:
        """Parameters for reports"""
        return {
            'd': self.d,
            'N': self.N,
            'D': self.D,
            'beta': self.beta,
            'potential': repr(self.potential),
            'coupling': self.coupling.descriptor,
        }


def beg_system(
    V: float, K: float, D: float, beta: float, d: int = 1  # pylint: disable=invalid-name
) -> SpinSystem:
    """BEG model on Z^d with J(x, y) = V + |K| on nearest neighbours"""
    return SpinSystem(
        d=d, N=1, D=D, beta=beta,
        potential=BEGPotential(V, K),
        coupling=nearest_neighbor_coupling(abs(V) + abs(K), d),
    )


def power_law_system(  # pylint: disable=too-many-arguments,too-many-positional-arguments
    C: float, epsilon: float, D: float, beta: float,  # pylint: disable=invalid-name
    d: int = 1, N: int = 1, radius: Optional[int] = None,  # pylint: disable=invalid-name
) -> SpinSystem:
    """Power-law product coupling with J(x, y) = |C| N^2 / |x - y|^(d + epsilon)"""
    return SpinSystem(
        d=d, N=N, D=D, beta=beta,
        potential=PowerLawPotential(C, epsilon, d),
        coupling=power_law_coupling(abs(C) * N * N, epsilon, d, radius),
    )


def zero_system(D: float, beta: float, d: int = 1, N: int = 1) -> SpinSystem:  # pylint: disable=invalid-name
    """Non-interacting system"""
    return SpinSystem(
        d=d, N=N, D=D, beta=beta,
        potential=zero_potential(),
        coupling=nearest_neighbor_coupling(0.0, d),
    )
