"""Annular non-crossing combinatorics and third-order Wigner moments."""

from ._annular import (
    BoundExceeded,
    Poly,
    alpha,
    classify,
    count,
    count_closed,
    enumerate,
    expand,
    family_count,
    invert,
    limit_counts,
    max_m,
    ps_nc,
    set_max_m,
    set_threads,
    simulate,
    verify,
)

__all__ = [
    "BoundExceeded",
    "Poly",
    "alpha",
    "classify",
    "count",
    "count_closed",
    "enumerate",
    "expand",
    "family_count",
    "invert",
    "limit_counts",
    "max_m",
    "ps_nc",
    "set_max_m",
    "set_threads",
    "simulate",
    "verify",
]
