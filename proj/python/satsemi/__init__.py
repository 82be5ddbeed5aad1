"""Saturated numerical semigroups with a fixed Frobenius number."""

from ._core import (
    Error,
    Semigroup,
    apery,
    closure,
    enumerate_rank,
    enumerate_sat,
    enumerate_sat_genus,
    feasible_rank,
    is_sat_set,
    maximal_elements,
    min_genus,
    minimal_system,
    pseudo_frobenius,
    rank,
    special_gaps,
    tooth,
    verify,
)

__all__ = [
    "Error",
    "Semigroup",
    "apery",
    "closure",
    "enumerate_rank",
    "enumerate_sat",
    "enumerate_sat_genus",
    "feasible_rank",
    "is_sat_set",
    "maximal_elements",
    "min_genus",
    "minimal_system",
    "pseudo_frobenius",
    "rank",
    "special_gaps",
    "tooth",
    "verify",
]
