"""Test fixtures for expansion tests."""
import pytest

from src.model import Volume, beg_system
from src.polymers import ActivityTable, Polymer, activity_table


@pytest.fixture
def convergent_table():
    """Activities of BEG V=1, K=0, D=1 at beta=0.2 on a 4-site chain"""
    system = beg_system(V=1.0, K=0.0, D=1.0, beta=0.2)
    volume = Volume.chain(4)
    return system, volume, activity_table(system, volume, 4)


@pytest.fixture
def make_table():
    """Complete table on a chain with only the given activities switched on"""
    def build(length, activities):
        volume = Volume.chain(length)
        table = activity_table(beg_system(0.0, 0.0, 1.0, 1.0), volume, length)
        updates = {Polymer.of(sites): zeta for sites, zeta in activities.items()}
        return ActivityTable(volume, {**table.entries, **updates}, 1.0, length)
    return build
