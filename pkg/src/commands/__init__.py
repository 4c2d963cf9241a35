"""Commands module for spinpoly.

One command class per analysis plus the routing handler.
"""
from .handler import CommandHandler
from .verify import VERIFY_TOPIC, CheckResult, VerifyCommands
from .scan import SCAN_COLUMNS, ScanCommands
from .activities import ACTIVITY_COLUMNS, ActivitiesCommands, rows_to_activities
from .expansion import ExpansionCommands
from .base import (
    EXIT_FAILURE, EXIT_OK, EXIT_USAGE, BaseCommandMixin, atomic_write, format_sites,
    format_value, parse_sites, parse_value, read_csv, read_json, render_csv, render_json
)

__all__ = [
    'CommandHandler',
    'VERIFY_TOPIC', 'CheckResult', 'VerifyCommands',
    'SCAN_COLUMNS', 'ScanCommands',
    'ACTIVITY_COLUMNS', 'ActivitiesCommands', 'rows_to_activities',
    'ExpansionCommands',
    'EXIT_FAILURE', 'EXIT_OK', 'EXIT_USAGE', 'BaseCommandMixin', 'atomic_write',
    'format_sites', 'format_value', 'parse_sites', 'parse_value', 'read_csv', 'read_json',
    'render_csv', 'render_json',
]
