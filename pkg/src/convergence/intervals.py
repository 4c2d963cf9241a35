"""Locating the high- and low-temperature convergence regions in beta."""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.optimize import bisect

from src.config import SCAN_DEFAULTS, TOLERANCES
from src.model import SpinSystem
from .criteria import crude_margin, estr_margin

logger = logging.getLogger(__name__)

VARIANTS = ('closed_form', 'crude')

MARGIN_CLIP = 1e300


@dataclass(frozen=True)
class BetaIntervals:
    """Convergence holds on [0, beta1] and on [beta2, inf)"""
    beta1: Optional[float]
    beta2: Optional[float]
    all_beta: bool = False
    certified: bool = False


def beta_grid(beta_max: float, step: float, beta_min: float = 0.0) -> np.ndarray:
    """Evenly spaced grid from beta_min to beta_max inclusive"""
    if step <= 0:
        raise ValueError(f"grid step must be positive, got {step}")
    if beta_max < beta_min:
        raise ValueError(f"empty beta range [{beta_min}, {beta_max}]")
    count = int(round((beta_max - beta_min) / step)) + 1
    return np.linspace(beta_min, beta_max, count)


def margin_function(sys: SpinSystem, variant: str) -> Callable[[float], float]:
    """beta -> log-margin of the chosen criterion, clipped to finite values"""
    if variant not in VARIANTS:
        raise ValueError(f"unknown criterion variant {variant!r}")
    margin = estr_margin if variant == 'closed_form' else crude_margin

    def at(beta: float) -> float:
        value = margin(sys.with_beta(beta))
        return float(np.clip(value, -MARGIN_CLIP, MARGIN_CLIP))

    return at


def persistence_certified(sys: SpinSystem, beta_max: float, variant: str = 'closed_form') -> bool:
    """Whether a verdict true at beta_max stays true for every larger beta

    Beyond 1/(D - J) the ratio exp((D - J) beta)/beta grows, h <= 2 beta J,
    and once 8N exp(-(D - J) beta) <= 3 the factor F stays above 1/(12N).
    """
    gap = sys.D - sys.J
    if gap <= 0 or beta_max < 1.0 / gap:
        return False
    if sys.J == 0:
        return True
    if variant == 'crude':
        return crude_margin(sys.with_beta(beta_max)) >= -TOLERANCES['criterion_rel']
    if -gap * beta_max > math.log(3.0 / (8 * sys.N)):
        return False
    return gap * beta_max - math.log(12 * sys.N) >= math.log(2 * beta_max * sys.J)


def _refine(at: Callable[[float], float], inside: float, outside: float, tol: float) -> float:
    """Boundary between a true grid point and a false one, by bisection"""
    if at(inside) * at(outside) > 0:
        return inside
    low, high = sorted((inside, outside))
    return float(bisect(at, low, high, xtol=tol))


def find_beta_intervals(
    sys: SpinSystem,
    beta_max: float = SCAN_DEFAULTS['beta_max'],
    step: float = SCAN_DEFAULTS['grid_step'],
    refine_tol: float = SCAN_DEFAULTS['refine_tol'],
    variant: str = 'closed_form',
) -> BetaIntervals:
    """Scan the criterion over [0, beta_max] and refine both region edges"""
    at = margin_function(sys, variant)
    grid = beta_grid(beta_max, step)
    verdicts = np.array([at(b) >= -TOLERANCES['criterion_rel'] for b in grid])
    if variant == 'crude' and sys.D < sys.J:
        verdicts[:] = False
    certified = persistence_certified(sys, beta_max, variant) and bool(verdicts[-1])
    if verdicts.all():
        if certified:
            logger.info("Criterion %s holds for every beta (D=%g, J=%g)", variant, sys.D, sys.J)
            return BetaIntervals(None, None, all_beta=True, certified=True)
        logger.warning("Criterion %s holds on the whole grid but persistence beyond "
                       "beta=%g is not certified", variant, beta_max)
        return BetaIntervals(float(grid[-1]), None)
    failing = np.flatnonzero(~verdicts)
    first, last = int(failing[0]), int(failing[-1])
    beta1 = None
    if first > 0:
        beta1 = _refine(at, float(grid[first - 1]), float(grid[first]), refine_tol)
    beta2 = None
    if last < len(grid) - 1:
        if certified:
            beta2 = _refine(at, float(grid[last + 1]), float(grid[last]), refine_tol)
        elif sys.D > sys.J:
            logger.warning("Criterion %s holds up to beta=%g but persistence is not "
                           "certified", variant, beta_max)
    logger.info("Criterion %s: beta1=%s beta2=%s", variant, beta1, beta2)
    return BetaIntervals(beta1, beta2, certified=certified)
