"""Exact word calculus for graphs of groups, ordinal permutations and the shift map."""

__version__ = "0.1.0"
