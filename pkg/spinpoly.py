#!/usr/bin/env python3
"""Main entry point for the spinpoly application.

Runs polymer-expansion analyses of bounded integer spin systems.
"""
import sys

from src.app import main

if __name__ == '__main__':
    sys.exit(main())
