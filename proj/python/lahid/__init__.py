"""Exact Lah and Stirling numbers, and six-route verification of the
alternating Lah sum identity."""

from ._core import (
    binomial,
    binomial_inversion,
    chu_vandermonde_closed,
    chu_vandermonde_identity,
    factorial,
    falling,
    gkp_identity,
    hypergeom_2f1_terminating,
    lah,
    lah_bruteforce,
    lah_triangle,
    lhs_direct,
    rhs_reference,
    rising,
    route,
    route_names,
    run_cli,
    stirling1,
    stirling1_from_log_series,
    stirling1_from_rising_poly,
    stirling1_triangle,
    verify_grid,
    verify_report,
)

__all__ = [
    "binomial",
    "binomial_inversion",
    "chu_vandermonde_closed",
    "chu_vandermonde_identity",
    "factorial",
    "falling",
    "gkp_identity",
    "hypergeom_2f1_terminating",
    "lah",
    "lah_bruteforce",
    "lah_triangle",
    "lhs_direct",
    "rhs_reference",
    "rising",
    "route",
    "route_names",
    "run_cli",
    "stirling1",
    "stirling1_from_log_series",
    "stirling1_from_rising_poly",
    "stirling1_triangle",
    "verify_grid",
    "verify_report",
]
