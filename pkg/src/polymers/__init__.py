"""Polymer activities, activity tables and their size bounds."""
from .weights import Polymer, lambda_tilde, log_activity_scale, single_site_weight
from .activity import (
    activity, check_activity_budget, has_connected_support, tree_graph_activity_bound
)
from .table import ActivityTable, activity_table
from .bounds import activity_size_bound

__all__ = [
    'Polymer', 'lambda_tilde', 'log_activity_scale', 'single_site_weight',
    'activity', 'check_activity_budget', 'has_connected_support',
    'tree_graph_activity_bound',
    'ActivityTable', 'activity_table',
    'activity_size_bound',
]
