"""Spin-system model: sites, volumes, potentials, couplings and the Hamiltonian."""
from .lattice import Site, Volume, euclidean, manhattan
from .potentials import (
    PairPotential, BEGPotential, PowerLawPotential, TabulatedPotential, zero_potential
)
from .coupling import (
    CouplingBound, TailCertificate, nearest_neighbor_coupling, power_law_coupling,
    power_law_tail_bound, tabulated_coupling
)
from .system import SpinConfiguration, SpinSystem, beg_system, power_law_system, zero_system
from .energy import (
    GroundStateVerdict, configuration_blocks, energies, ground_state_check, hamiltonian,
    interaction_tables
)
from .assumptions import (
    AssumptionVerdict, CouplingVerdict, validate_assumption_A, validate_assumption_B
)

__all__ = [
    'Site', 'Volume', 'euclidean', 'manhattan',
    'PairPotential', 'BEGPotential', 'PowerLawPotential', 'TabulatedPotential',
    'zero_potential',
    'CouplingBound', 'TailCertificate', 'nearest_neighbor_coupling', 'power_law_coupling',
    'power_law_tail_bound', 'tabulated_coupling',
    'SpinConfiguration', 'SpinSystem', 'beg_system', 'power_law_system', 'zero_system',
    'GroundStateVerdict', 'configuration_blocks', 'energies', 'ground_state_check',
    'hamiltonian', 'interaction_tables',
    'AssumptionVerdict', 'CouplingVerdict', 'validate_assumption_A', 'validate_assumption_B',
]
