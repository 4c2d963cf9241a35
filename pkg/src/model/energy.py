"""Hamiltonian evaluation, single and vectorized over all configurations."""
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src.config import ENUMERATION_LIMITS, TOLERANCES
from src.errors import BudgetExceededError
from .lattice import Volume
from .system import SpinConfiguration, SpinSystem

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1 << 16

PairTable = Tuple[int, int, np.ndarray]


def interaction_tables(sys: SpinSystem, vol: Volume) -> List[PairTable]:
    """(i, j, table) for every pair of the volume whose potential is not identically zero"""
    tables = []
    for i, j in vol.pairs():
        x, y = vol.sites[i], vol.sites[j]
        if not sys.potential.interacts(x, y):
            continue
        table = sys.potential.pair_table(x, y, sys.N)
        if np.any(table != 0.0):
            tables.append((i, j, table))
    return tables


def hamiltonian(sys: SpinSystem, vol: Volume, cfg: SpinConfiguration) -> float:
    """H = sum over unordered pairs of V(x, y, s_x, s_y) + D sum_x s_x^2"""
    if cfg.volume != vol:
        raise ValueError("configuration domain does not match the volume")
    if any(abs(s) > sys.N for s in cfg.values):
        raise ValueError(f"configuration has spins outside [-{sys.N}, {sys.N}]")
    energy = 0.0
    for i, j in vol.pairs():
        energy += sys.potential(vol.sites[i], vol.sites[j], cfg.values[i], cfg.values[j])
    return energy + sys.D * sum(s * s for s in cfg.values)


def configuration_count(sys: SpinSystem, vol: Volume) -> int:
    """(2N + 1)^|Lambda|"""
    return (2 * sys.N + 1) ** len(vol)


def check_configuration_budget(sys: SpinSystem, vol: Volume):
    """Raise when exhaustive enumeration over the volume is out of budget"""
    count = configuration_count(sys, vol)
    if count > ENUMERATION_LIMITS['max_configurations']:
        raise BudgetExceededError(
            f"{count} configurations on {len(vol)} sites exceed the budget of "
            f"{ENUMERATION_LIMITS['max_configurations']}"
        )


def configuration_blocks(
    sys: SpinSystem, vol: Volume, block_size: int = BLOCK_SIZE
) -> Iterator[np.ndarray]:
    """All configurations in lexicographic order, as int arrays of shape (block, |Lambda|)"""
    check_configuration_budget(sys, vol)
    base = 2 * sys.N + 1
    size = len(vol)
    powers = base ** np.arange(size - 1, -1, -1, dtype=np.int64)
    total = configuration_count(sys, vol)
    for start in range(0, total, block_size):
        index = np.arange(start, min(start + block_size, total), dtype=np.int64)
        yield (index[:, None] // powers[None, :]) % base - sys.N


def energies(sys: SpinSystem, spins: np.ndarray, tables: List[PairTable]) -> np.ndarray:
    """Hamiltonian of each row of a configuration array"""
    offset = sys.N
    result = sys.D * np.sum(spins * spins, axis=1, dtype=float)
    for i, j, table in tables:
        result += table[spins[:, i] + offset, spins[:, j] + offset]
    return result


@dataclass(frozen=True)
class GroundStateVerdict:
    """Outcome of the exhaustive ground-state search"""
    unique_zero_minimum: bool
    minimum_energy: float
    witness: Optional[Tuple[int, ...]] = None


def ground_state_check(sys: SpinSystem, vol: Volume) -> GroundStateVerdict:
    """Check that the all-zero configuration is the unique minimizer of H on the volume"""
    tables = interaction_tables(sys, vol)
    tol = TOLERANCES['identity_rel']
    best = 0.0
    witness = None
    for block in configuration_blocks(sys, vol):
        block_energies = energies(sys, block, tables)
        nonzero = np.any(block != 0, axis=1)
        if not np.any(nonzero):
            continue
        candidates = np.where(nonzero, block_energies, np.inf)
        k = int(np.argmin(candidates))
        if witness is None or candidates[k] < best:
            best = float(candidates[k])
            witness = tuple(int(s) for s in block[k])
    if witness is None:
        return GroundStateVerdict(True, 0.0)
    unique = best > tol
    if not unique:
        logger.info("Configuration %s reaches energy %.6g <= 0", witness, best)
    return GroundStateVerdict(unique, min(best, 0.0), None if unique else witness)
