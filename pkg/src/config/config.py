"""Configuration file for the spinpoly toolkit.

Modify these settings to change enumeration budgets and scan defaults
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple

# Exact-enumeration budgets
ENUMERATION_LIMITS = {
    'max_graph_vertices': 7,  # 2^21 edge subsets
    'max_tree_vertices': 8,  # 8^6 Pruefer sequences
    'max_polymer_size': 6,
    'max_spin_bound': 3,
    'max_configurations': 3 ** 12,  # (2N+1)^|Lambda|
    'max_cluster_order': 4,
}

# Convergence scan settings
SCAN_DEFAULTS = {
    'beta_max': 50.0,
    'grid_step': 0.01,
    'refine_tol': 1e-6,
    'a_max_cap': 20.0,  # upper end of the search for the infimum over a
    'series_terms': 512,  # explicit terms before the geometric tail bound
    'fp_tolerance': 1e-9,
}

# Comparison tolerances
TOLERANCES = {
    'identity_rel': 1e-10,
    'criterion_rel': 1e-12,
}

# Identity suite settings
VERIFY_DEFAULTS = {
    'samples': 20,  # random weight sets per vertex count
    'seed': 0,
    'max_n': 6,
    'weight_scale': 1.0,  # weights drawn uniformly from [-scale, scale]
}

# Logging Configuration
LOGGING_CONFIG = {
    'level': 'INFO',
    'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    'file': None,
    'level_env': 'SPINPOLY_LOG_LEVEL',
    'file_env': 'SPINPOLY_LOG_FILE',
}

# Output settings
OUTPUT_DEFAULTS = {
    'format': 'csv',
    'summary_suffix': '.summary.json',
    'site_separator': ';',
    'coordinate_separator': ',',
}

ANALYSES = ('verify', 'scan', 'activities', 'expansion')


@dataclass
class SystemSpec:  # pylint: disable=too-many-instance-attributes
    """Spin system section of a run configuration"""
    d: int = 1
    N: int = 1  # pylint: disable=invalid-name
    D: float = 1.0  # pylint: disable=invalid-name
    beta: float = 1.0
    beta_range: Optional[Tuple[float, float, float]] = None  # (lo, hi, step)
    potential: str = 'beg'
    V: float = 1.0  # pylint: disable=invalid-name
    K: float = 0.0  # pylint: disable=invalid-name
    C: float = 1.0  # pylint: disable=invalid-name
    epsilon: float = 1.0
    coupling_radius: Optional[int] = None


@dataclass
class VolumeSpec:
    """Volume section of a run configuration"""
    shape: str = 'chain'
    sides: Tuple[int, ...] = (4,)


@dataclass
class RunConfig:  # pylint: disable=too-many-instance-attributes
    """Configuration for a single spinpoly invocation"""
    analysis: str
    system: SystemSpec = field(default_factory=SystemSpec)
    volume: VolumeSpec = field(default_factory=VolumeSpec)
    max_size: Optional[int] = None
    order: int = 4
    samples: int = VERIFY_DEFAULTS['samples']
    seed: int = VERIFY_DEFAULTS['seed']
    output_format: str = OUTPUT_DEFAULTS['format']
    output_path: Optional[str] = None
