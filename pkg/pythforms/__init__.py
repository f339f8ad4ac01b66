"""Pythagorean binary quadratic forms."""

__version__ = "1.0.0"
