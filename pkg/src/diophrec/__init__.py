"""Diophantine equations whose integer solutions are linear-recurrence orbits."""

__version__ = "0.1.0"
