"""Exact deformation quantisation: Moyal-type star products, Weyl operators,
WKB wavefunctions for plane curves and symplectic reduction of Gaussian
wavefunctions. All arithmetic is exact (big rationals)."""

from ._starq import (  # noqa: F401
    HSeries,
    Poly,
    StarqError,
    branch_coefficients,
    check,
    lambda_series,
    parse,
    reduce_ks4d,
    run_cli,
    star,
    wkb,
)

__all__ = [
    "HSeries",
    "Poly",
    "StarqError",
    "branch_coefficients",
    "check",
    "lambda_series",
    "parse",
    "reduce_ks4d",
    "run_cli",
    "star",
    "wkb",
]
