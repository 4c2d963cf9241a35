"""Configuration module for spinpoly.

Contains enumeration budgets, scan defaults and the run configuration.
"""
from .config import *
from .loader import load_run_config, parse_run_config
