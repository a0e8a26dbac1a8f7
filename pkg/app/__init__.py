"""Ultrafast geometric single- and two-qubit gate engine beyond the rotating-wave approximation."""

__version__ = "1.0.0"
