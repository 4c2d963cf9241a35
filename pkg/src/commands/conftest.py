"""Test fixtures for command tests."""
import pytest

from src.config import RunConfig, SystemSpec, VolumeSpec


@pytest.fixture
def make_config(tmp_path):
    """Run config for one analysis, writing into tmp_path unless out is None"""
    def build(analysis, out='out', system=None, volume=None, **fields):
        return RunConfig(
            analysis=analysis,
            system=system or SystemSpec(V=1.0, K=0.0, D=1.0, beta=0.2),
            volume=volume or VolumeSpec('chain', (4,)),
            output_path=str(tmp_path / out) if out else None,
            **fields,
        )
    return build


@pytest.fixture
def small_verify(make_config):
    """verify config on a 3-site chain with few random samples"""
    return make_config('verify', 'verify.json', volume=VolumeSpec('chain', (3,)), samples=3)
