"""Spinpoly source package."""
