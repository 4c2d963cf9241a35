"""Exact partition functions, the polymer gas and the pressure series."""
from .exact import free_energy_exact, log_partition_function_exact, partition_function_exact
from .gas import (
    FactorizationResult, factorization_check, pressure_exact, xi_exact, xi_lower_bound
)
from .cluster import cluster_factor, cluster_terms, pressure_truncated

__all__ = [
    'free_energy_exact', 'log_partition_function_exact', 'partition_function_exact',
    'FactorizationResult', 'factorization_check', 'pressure_exact', 'xi_exact',
    'xi_lower_bound',
    'cluster_factor', 'cluster_terms', 'pressure_truncated',
]
