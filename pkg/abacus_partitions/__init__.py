# abacus_partitions/__init__.py
"""Exact 2-runner abacus calculus for integer partitions."""

__version__ = "0.1.0"
