"""Single-site weight and the reduced activity scale lambda~."""
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from src.model import Site, SpinSystem


@dataclass(frozen=True, order=True)
class Polymer:
    """Finite site set with at least two sites, kept in canonical order"""
    sites: Tuple[Site, ...]

    def __post_init__(self):
        ordered = tuple(sorted(tuple(site) for site in self.sites))
        if len(ordered) < 2:
            raise ValueError("a polymer has at least two sites")
        if len(set(ordered)) != len(ordered):
            raise ValueError("polymer sites must be distinct")
        object.__setattr__(self, 'sites', ordered)

    @classmethod
    def of(cls, sites: Sequence[Sequence[int]]) -> 'Polymer':
        """Build from any iterable of coordinate sequences"""
        return cls(tuple(tuple(site) for site in sites))

    def __len__(self) -> int:
        return len(self.sites)

    def __contains__(self, site) -> bool:
        return tuple(site) in self.sites

    def overlaps(self, other: 'Polymer') -> bool:
        """Incompatibility: the site sets intersect"""
        return not set(self.sites).isdisjoint(other.sites)


def single_site_weight(sys: SpinSystem) -> float:
    """1 + 2 sum_{k=1}^N exp(-beta D k^2)"""
    return 1.0 + 2.0 * sum(math.exp(-sys.beta * sys.D * k * k) for k in range(1, sys.N + 1))


def lambda_tilde(sys: SpinSystem) -> float:
    """exp(-beta D) / (1 + 2 sum_k exp(-beta D k^2))"""
    return math.exp(-sys.beta * sys.D) / single_site_weight(sys)


def log_activity_scale(sys: SpinSystem) -> float:
    """ln(2N lambda~ exp(beta J)), finite where exp(beta J) overflows"""
    return (math.log(2 * sys.N) - sys.beta * (sys.D - sys.J)
            - math.log(single_site_weight(sys)))
