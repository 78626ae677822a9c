"""Exact character codegrees and codegree graphs of small finite groups."""

from ._core import (
    Analysis,
    CdgError,
    analyze,
    analyze_generators,
    catalog,
    diophantine_solutions,
    dixon_prime,
    group_order,
    verify,
)

__all__ = [
    "Analysis",
    "CdgError",
    "analyze",
    "analyze_generators",
    "catalog",
    "diophantine_solutions",
    "dixon_prime",
    "group_order",
    "verify",
]
