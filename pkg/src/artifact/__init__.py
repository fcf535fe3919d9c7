"""Tableau combinatorics for a symplectic branching rule, with an
independent character oracle and a batch verification harness."""

__version__ = "0.1.0"
