"""Brute-force partition function of a finite volume."""
import logging
import math

import numpy as np
from scipy.special import logsumexp

from src.model import SpinSystem, Volume, configuration_blocks, energies, interaction_tables

logger = logging.getLogger(__name__)


def log_partition_function_exact(sys: SpinSystem, vol: Volume) -> float:
    """ln Z_Lambda by exhaustive enumeration, summed in log space"""
    tables = interaction_tables(sys, vol)
    partial = [float(logsumexp(-sys.beta * energies(sys, block, tables)))
               for block in configuration_blocks(sys, vol)]
    log_z = float(logsumexp(np.array(partial)))
    logger.debug("ln Z on %d sites at beta=%g: %.17g", len(vol), sys.beta, log_z)
    return log_z


def partition_function_exact(sys: SpinSystem, vol: Volume) -> float:
    """Z_Lambda = sum over all configurations of exp(-beta H)"""
    return math.exp(log_partition_function_exact(sys, vol))


def free_energy_exact(sys: SpinSystem, vol: Volume) -> float:
    """f_Lambda = ln Z_Lambda / |Lambda|"""
    return log_partition_function_exact(sys, vol) / len(vol)
