"""Closed-form bound on the size-n activity sums."""
import math

from src.model import SpinSystem
from .weights import log_activity_scale


def activity_size_bound(sys: SpinSystem, n: int) -> float:
    """n^(n-2)/(n-1)! h(beta, J)^(n-1) (2N lambda~ exp(beta J))^n

    Bounds sup_x sum_{R contains x, |R| = n} |zeta(R)|. Returns inf when the
    bound exceeds the float range.
    """
    if n < 2:
        raise ValueError(f"polymers have at least two sites, got n = {n}")
    h = sys.coupling.saturated_sup_sum(sys.beta)
    if h == 0.0:
        return 0.0
    log_bound = ((n - 2) * math.log(n) - math.lgamma(n) + (n - 1) * math.log(h)
                 + n * log_activity_scale(sys))
    return math.exp(log_bound) if log_bound < 709 else math.inf
