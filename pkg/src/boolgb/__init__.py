"""Groebner bases for Boolean polynomial ideals with bitmask monomials."""

from .buchberger import (
    GroebnerBasis,
    buchberger_gb,
    field_s_polynomial,
    interreduce,
    is_groebner_basis,
    normal_form,
    s_polynomial,
)
from .ring import ParseError, Polynomial, Ring, parse_poly, parse_poly_file, render_poly

__all__ = [
    "GroebnerBasis",
    "ParseError",
    "Polynomial",
    "Ring",
    "buchberger_gb",
    "field_s_polynomial",
    "interreduce",
    "is_groebner_basis",
    "normal_form",
    "parse_poly",
    "parse_poly_file",
    "render_poly",
    "s_polynomial",
]
