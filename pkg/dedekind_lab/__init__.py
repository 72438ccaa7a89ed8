"""
Dedekind Lab - exact Dedekind sums and Dedekind-Rademacher sums.

This package contains the rational substrate, the sum evaluators,
the theorem and level-set lab, and the command-line harness.
"""

__version__ = "1.0.0"
