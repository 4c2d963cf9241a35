"""Closed-form sufficient conditions for convergence of the polymer expansion.

Comparisons are made between logarithms so that exp((D - J) beta) never
has to be formed at large beta.
"""
import logging
import math
from typing import Tuple

import numpy as np

from src.config import TOLERANCES
from src.model import SpinSystem
from src.polymers import single_site_weight

logger = logging.getLogger(__name__)


def h_beta(sys: SpinSystem) -> float:
    """h(beta, J) = sup_x sum_{y != x} (1 - exp(-beta J(x, y)))"""
    return sys.coupling.saturated_sup_sum(sys.beta)


def log_F_of_beta(sys: SpinSystem) -> float:  # pylint: disable=invalid-name
    """ln F(beta), finite even where F itself underflows"""
    weight = single_site_weight(sys)
    denominator = np.logaddexp(math.log(8 * sys.N ** 2) - (sys.D - sys.J) * sys.beta,
                               math.log(3 * sys.N * weight))
    return math.log(0.5 * weight * weight) - float(denominator)


def F_of_beta(sys: SpinSystem) -> float:  # pylint: disable=invalid-name
    """F(beta) = w^2 / (2 (8 N^2 exp(-(D - J) beta) + 3 N w)), w the single-site weight"""
    return math.exp(log_F_of_beta(sys))


def _exp_or_inf(value: float) -> float:
    return math.exp(value) if value < 709 else math.inf


def estr_margin(sys: SpinSystem) -> float:
    """ln(exp((D - J) beta) F(beta)) - ln h(beta, J); +inf when h vanishes"""
    h = h_beta(sys)
    if h == 0.0:
        return math.inf
    return (sys.D - sys.J) * sys.beta + log_F_of_beta(sys) - math.log(h)


def estr_sides(sys: SpinSystem) -> Tuple[float, float]:
    """(exp((D - J) beta) F(beta), h(beta, J))"""
    return _exp_or_inf((sys.D - sys.J) * sys.beta + log_F_of_beta(sys)), h_beta(sys)


def criterion_closed_form(sys: SpinSystem) -> bool:
    """exp((D - J) beta) F(beta) >= h(beta, J)"""
    return estr_margin(sys) >= -TOLERANCES['criterion_rel']


def crude_constant(N: int) -> int:  # pylint: disable=invalid-name
    """12 N + 32 N^2"""
    return 12 * N + 32 * N * N


def crude_margin(sys: SpinSystem) -> float:
    """(D - J) beta - ln((12 N + 32 N^2) beta J); +inf when beta J vanishes"""
    scale = crude_constant(sys.N) * sys.beta * sys.J
    if scale == 0.0:
        return math.inf
    return (sys.D - sys.J) * sys.beta - math.log(scale)


def criterion_crude(sys: SpinSystem) -> bool:
    """exp((D - J) beta) >= (12 N + 32 N^2) beta J; never holds for D < J"""
    if sys.D < sys.J:
        return False
    return crude_margin(sys) >= -TOLERANCES['criterion_rel']


def Dc_upper(N: int, J: float) -> float:  # pylint: disable=invalid-name
    """(1 + (12 N + 32 N^2) / e) J"""
    if N < 1:
        raise ValueError(f"spin bound N must be at least 1, got {N}")
    if J <= 0:
        raise ValueError(f"the crystal-field threshold needs J > 0, got {J}")
    return (1.0 + crude_constant(N) / math.e) * J
