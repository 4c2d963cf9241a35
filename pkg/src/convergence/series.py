"""The Fernandez-Procacci condition for size-indexed activity bounds.

For a bound rho_n >= sup_x sum_{R contains x, |R| = n} |zeta(R)| the
expansion converges when

    inf_{a > 0} (e^a - 1)^-1 sum_{n >= 2} e^{a n} rho_n <= 1.

Infinite series are summed explicitly over the first SCAN_DEFAULTS
['series_terms'] terms and closed with a geometric tail, which needs a
bound `growth` on rho_{n+1} / rho_n.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Mapping, Optional

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import gammaln, logsumexp

from src.config import SCAN_DEFAULTS
from src.model import SpinSystem
from src.polymers import ActivityTable, log_activity_scale
from .criteria import h_beta

logger = logging.getLogger(__name__)

LogRho = Callable[[np.ndarray], np.ndarray]

GRID_POINTS = 64

# Mode names for the analytic bound; closed_form is an alias
CLOSED_FORM_MODES = ('paper_bound', 'closed_form')


@dataclass(frozen=True)
class SizeSeries:
    """ln rho_n as a function of n, with a ratio bound or a finite support"""
    log_rho: LogRho
    growth: float = 0.0
    support: Optional[int] = None
    vanishing: bool = False

    @classmethod
    def closed_form(cls, sys: SpinSystem) -> 'SizeSeries':
        """rho_n = mu x^(n-1) n^(n-1) / n! with mu = 2N lambda~ e^{beta J}, x = h mu"""
        h = h_beta(sys)
        if h == 0.0:
            return cls.zero()
        log_mu = log_activity_scale(sys)
        log_x = math.log(h) + log_mu
        return cls(
            log_rho=lambda n: log_mu + (n - 1) * (log_x + np.log(n)) - gammaln(n + 1),
            growth=math.exp(1.0 + log_x) if log_x < 700 else math.inf,
        )

    @classmethod
    def geometric(cls, c: float) -> 'SizeSeries':
        """rho_n = c^n"""
        if c == 0.0:
            return cls.zero()
        log_c = math.log(c)
        return cls(log_rho=lambda n: n * log_c, growth=c)

    @classmethod
    def from_sups(cls, sups: Mapping[int, float]) -> 'SizeSeries':
        """Measured finite-volume sups, zero beyond the largest size"""
        positive = {n: s for n, s in sups.items() if s > 0.0}
        if not positive:
            return cls.zero()
        largest = max(positive)

        def log_rho(n: np.ndarray) -> np.ndarray:
            return np.array([math.log(positive[k]) if k in positive else -np.inf
                             for k in np.atleast_1d(n).astype(int)])

        return cls(log_rho=log_rho, support=largest)

    @classmethod
    def zero(cls) -> 'SizeSeries':
        """rho_n = 0 for every n"""
        return cls(log_rho=lambda n: np.full(np.shape(n), -np.inf), support=2, vanishing=True)

    @property
    def a_max(self) -> float:
        """Largest a with a convergent tail, capped"""
        cap = SCAN_DEFAULTS['a_max_cap']
        if self.support is not None or self.growth == 0.0:
            return cap
        if self.growth >= 1.0:
            return 0.0
        return min(cap, -math.log(self.growth))

    def log_sum(self, a):
        """ln sum_{n >= 2} e^{a n} rho_n for scalar or array a, +inf where the tail bound fails"""
        a = np.asarray(a, dtype=float)
        last = self.support if self.support is not None else SCAN_DEFAULTS['series_terms']
        n = np.arange(2, last + 1, dtype=float)
        log_terms = a[..., None] * n + self.log_rho(n)
        total = logsumexp(log_terms, axis=-1)
        if self.support is None:
            ratio = np.exp(a) * self.growth
            with np.errstate(divide='ignore', invalid='ignore'):
                log_tail = log_terms[..., -1] + np.log(ratio) - np.log1p(-ratio)
            total = np.where(ratio < 1.0, np.logaddexp(total, log_tail), np.inf)
        return total if total.ndim else float(total)


def fp_objective(series: SizeSeries, a):
    """ln[(e^a - 1)^-1 sum_{n >= 2} e^{a n} rho_n]"""
    return series.log_sum(a) - np.log(np.expm1(a))


@dataclass(frozen=True)
class FPResult:
    """Infimum over a of the Fernandez-Procacci ratio"""
    value: float
    a: Optional[float]

    @property
    def satisfied(self) -> bool:
        """Condition holds up to the scan tolerance"""
        return self.value <= 1.0 + SCAN_DEFAULTS['fp_tolerance']


def fp_infimum(series: SizeSeries) -> FPResult:
    """Bounded Brent search for the best a, guarded by a coarse grid"""
    if series.vanishing:
        return FPResult(0.0, None)
    upper = series.a_max
    if upper <= 0.0:
        return FPResult(math.inf, None)
    lower = upper * 1e-9
    upper = upper * (1 - 1e-9)
    grid = np.linspace(lower, upper, GRID_POINTS)
    values = fp_objective(series, grid)
    best = int(np.argmin(values))
    best_a, best_value = float(grid[best]), float(values[best])
    left = float(grid[max(best - 1, 0)])
    right = float(grid[min(best + 1, GRID_POINTS - 1)])
    if math.isfinite(best_value) and right > left:
        result = minimize_scalar(lambda a: float(fp_objective(series, a)), bounds=(left, right),
                                 method='bounded', options={'xatol': 1e-12})
        if result.success and result.fun < best_value:
            best_a, best_value = float(result.x), float(result.fun)
    logger.debug("FP infimum at a=%.6g: ln ratio %.6g", best_a, best_value)
    return FPResult(math.exp(best_value) if best_value < 709 else math.inf, best_a)


def criterion_numeric_FP(  # pylint: disable=invalid-name
    sys: SpinSystem, bound_mode: str = 'paper_bound', table: Optional[ActivityTable] = None
) -> bool:
    """Fernandez-Procacci condition with the closed-form or the measured size bounds"""
    if bound_mode in CLOSED_FORM_MODES:
        series = SizeSeries.closed_form(sys)
    elif bound_mode == 'table':
        if table is None:
            raise ValueError("table mode needs an activity table")
        series = SizeSeries.from_sups(table.size_sups())
    else:
        raise ValueError(f"unknown bound mode {bound_mode!r}")
    return fp_infimum(series).satisfied
