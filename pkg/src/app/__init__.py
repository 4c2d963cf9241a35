"""App module for spinpoly.

Contains the command-line entry point.
"""
from .app import build_parser, configure_logging, main
