"""Activity tables over every polymer of a finite volume."""
import itertools
import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Mapping, Tuple

from src.config import ENUMERATION_LIMITS
from src.errors import BudgetExceededError
from src.model import SpinSystem, Volume
from .activity import activity
from .weights import Polymer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ActivityTable:
    """zeta(R) for every polymer R of the volume with 2 <= |R| <= max_size"""
    volume: Volume
    entries: Mapping[Polymer, float]
    beta: float
    max_size: int
    spin_bound: int = field(default=1)

    def __post_init__(self):
        if self.max_size < 2:
            raise ValueError("activity tables need max_size >= 2")
        for polymer in self.entries:
            if any(site not in self.volume for site in polymer.sites):
                raise ValueError(f"polymer {polymer.sites} leaves the volume")

    @property
    def polymers(self) -> List[Polymer]:
        """Polymers ordered by size, then by sites"""
        return sorted(self.entries, key=lambda p: (len(p), p.sites))

    def __getitem__(self, polymer: Polymer) -> float:
        return self.entries[polymer]

    def __len__(self) -> int:
        return len(self.entries)

    def nonzero(self) -> Dict[Polymer, float]:
        """Entries with a non-vanishing activity"""
        return {p: z for p, z in self.entries.items() if z != 0.0}

    def is_complete(self, max_size: int) -> bool:
        """Whether every subset of size 2..max_size is present"""
        if max_size > self.max_size:
            return False
        return all(Polymer(combo) in self.entries
                   for size in range(2, min(max_size, len(self.volume)) + 1)
                   for combo in itertools.combinations(self.volume.sites, size))

    def size_sups(self) -> Dict[int, float]:
        """Finite-volume sup_x sum_{R contains x, |R| = n} |zeta(R)| for each n"""
        sums: Dict[Tuple[int, Tuple[int, ...]], float] = {}
        for polymer, zeta in self.entries.items():
            for site in polymer.sites:
                key = (len(polymer), site)
                sums[key] = sums.get(key, 0.0) + abs(zeta)
        sups = {n: 0.0 for n in range(2, min(self.max_size, len(self.volume)) + 1)}
        for (size, _), total in sums.items():
            sups[size] = max(sups.get(size, 0.0), total)
        return sups

    def with_entries(self, updates: Mapping[Polymer, float]) -> 'ActivityTable':
        """Copy with some activities replaced"""
        entries = dict(self.entries)
        entries.update(updates)
        return replace(self, entries=entries)


def activity_table(sys: SpinSystem, vol: Volume, max_size: int) -> ActivityTable:
    """Exact activities of every subset of the volume with 2 <= |R| <= max_size"""
    if max_size > ENUMERATION_LIMITS['max_polymer_size']:
        raise BudgetExceededError(
            f"polymer size {max_size} exceeds the limit {ENUMERATION_LIMITS['max_polymer_size']}"
        )
    entries = {}
    for size in range(2, min(max_size, len(vol)) + 1):
        for combo in itertools.combinations(vol.sites, size):
            polymer = Polymer(combo)
            entries[polymer] = activity(sys, polymer)
    logger.info("Computed %d activities on %d sites (max size %d)",
                len(entries), len(vol), max_size)
    return ActivityTable(vol, entries, sys.beta, max_size, sys.N)
