"""Exact q-compactness engine for polyhedral asymmetric norms.

Scalars are fractions.Fraction; ints and "p/q" strings are accepted as input.
"""

from ._asymnorm import (
    AxiomThreeViolation,
    EmptySetError,
    InputError,
    Norm,
    ParseError,
    Set,
    UnsupportedDimension,
    arc_example,
    center,
    check,
    decide,
    e_of_k,
    extreme_points,
    lattice_norm,
    parse_instance,
    random_instance,
    render_svg,
    run_suite,
    sandwich_certify,
    verify_theorems,
    write_instance,
)

__all__ = [
    "AxiomThreeViolation",
    "EmptySetError",
    "InputError",
    "Norm",
    "ParseError",
    "Set",
    "UnsupportedDimension",
    "arc_example",
    "center",
    "check",
    "decide",
    "e_of_k",
    "extreme_points",
    "lattice_norm",
    "parse_instance",
    "random_instance",
    "render_svg",
    "run_suite",
    "sandwich_certify",
    "verify_theorems",
    "write_instance",
]
