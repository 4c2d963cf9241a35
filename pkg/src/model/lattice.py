"""Sites and finite volumes.

A site is a tuple of integer coordinates on Z^d; abstract site sets use
1-tuples as opaque indices. Tuples compare lexicographically, which gives
the canonical total order used for labelling everywhere else.
"""
import itertools
import math
from functools import cached_property
from dataclasses import dataclass
from typing import Dict, Iterator, Sequence, Tuple

Site = Tuple[int, ...]


def manhattan(x: Site, y: Site) -> int:
    """L1 distance between two lattice sites"""
    return sum(abs(a - b) for a, b in zip(x, y))


def euclidean(x: Site, y: Site) -> float:
    """Euclidean distance between two lattice sites"""
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(x, y)))


@dataclass(frozen=True)
class Volume:
    """Finite ordered set of sites with free boundary conditions"""
    sites: Tuple[Site, ...]

    def __post_init__(self):
        if not self.sites:
            raise ValueError("a volume needs at least one site")
        ordered = tuple(sorted(tuple(site) for site in self.sites))
        if len(set(ordered)) != len(ordered):
            raise ValueError("a volume cannot contain duplicate sites")
        dims = {len(site) for site in ordered}
        if len(dims) != 1:
            raise ValueError("all sites of a volume need the same dimension")
        object.__setattr__(self, 'sites', ordered)

    @classmethod
    def chain(cls, length: int) -> 'Volume':
        """1D chain of consecutive sites 0..length-1"""
        return cls(tuple((i,) for i in range(length)))

    @classmethod
    def box(cls, *sides: int) -> 'Volume':
        """Rectangular box in Z^d with the given side lengths"""
        if not sides:
            raise ValueError("a box needs at least one side length")
        return cls(tuple(itertools.product(*(range(side) for side in sides))))

    @property
    def dimension(self) -> int:
        """Coordinate dimension of the sites"""
        return len(self.sites[0])

    def __len__(self) -> int:
        return len(self.sites)

    def __iter__(self) -> Iterator[Site]:
        return iter(self.sites)

    def __contains__(self, site) -> bool:
        return tuple(site) in self.index_map

    @cached_property
    def index_map(self) -> Dict[Site, int]:
        """Position of every site in canonical order"""
        return {site: i for i, site in enumerate(self.sites)}

    def index(self, site: Sequence[int]) -> int:
        """Canonical position of a site"""
        try:
            return self.index_map[tuple(site)]
        except KeyError as e:
            raise ValueError(f"site {tuple(site)} is not in the volume") from e

    def pairs(self) -> Iterator[Tuple[int, int]]:
        """Unordered index pairs (i < j)"""
        return itertools.combinations(range(len(self.sites)), 2)
