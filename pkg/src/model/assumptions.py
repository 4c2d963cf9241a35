"""Checks of the potential assumptions A (vanishing on zero spins) and B (domination)."""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from src.config import TOLERANCES
from src.errors import DivergentCouplingError
from .lattice import Site, Volume
from .potentials import PowerLawPotential
from .system import SpinSystem

logger = logging.getLogger(__name__)

Witness = Tuple[Site, Site, int, int]


@dataclass(frozen=True)
class AssumptionVerdict:
    """Pass/fail with the first counterexample found"""
    passed: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class CouplingVerdict:
    """Outcome of assumption B with the achieved sup-sum 2J"""
    passed: bool
    two_j: float
    volume_sup_sum: float
    witness: Optional[Witness] = None

    @property
    def J(self) -> float:  # pylint: disable=invalid-name
        """Half the achieved sup-sum"""
        return 0.5 * self.two_j


def validate_assumption_A(sys: SpinSystem, vol: Volume) -> AssumptionVerdict:  # pylint: disable=invalid-name
    """V(x, y, s_x, s_y) = 0 whenever s_x s_y = 0, exhaustively over the volume"""
    for i, j in vol.pairs():
        for x, y in ((vol.sites[i], vol.sites[j]), (vol.sites[j], vol.sites[i])):
            for s in sys.spin_values:
                for sx, sy in ((0, s), (s, 0)):
                    if sys.potential(x, y, sx, sy) != 0.0:
                        logger.info("Assumption A fails at %s", (x, y, sx, sy))
                        return AssumptionVerdict(False, (x, y, sx, sy))
    return AssumptionVerdict(True)


def validate_assumption_B(sys: SpinSystem, vol: Volume) -> CouplingVerdict:  # pylint: disable=invalid-name
    """|V| <= J(x, y) pointwise on the volume, and the sup-sum 2J with its tail"""
    potential = sys.potential
    if isinstance(potential, PowerLawPotential) and potential.epsilon <= 0:
        raise DivergentCouplingError(
            f"power-law exponent d + {potential.epsilon} <= d: tail sum diverges"
        )
    slack = 1 + TOLERANCES['identity_rel']
    witness = None
    volume_sup = 0.0
    for x in vol.sites:
        row = 0.0
        for y in vol.sites:
            if x == y:
                continue
            bound = sys.coupling(x, y)
            row += bound
            if witness is not None:
                continue
            for sx in sys.spin_values:
                for sy in sys.spin_values:
                    if abs(potential(x, y, sx, sy)) > bound * slack:
                        witness = (x, y, sx, sy)
                        break
                if witness is not None:
                    break
        volume_sup = max(volume_sup, row)
    two_j = max(sys.coupling.sup_sum(), volume_sup)
    if witness is not None:
        logger.info("Assumption B fails at %s", witness)
    return CouplingVerdict(witness is None, two_j, volume_sup, witness)
