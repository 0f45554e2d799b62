"""Exact tools for triads of positive integers whose sum, sum of squares and
sum of cubes are all perfect squares."""

__version__ = "0.1.0"

from .exactnum import DomainError, isqrt, perfect_square, rational_square_root
from .parametric import (
    ParamPoint,
    RationalTriple,
    abc_from_pqu,
    certify_family,
    p_of_m,
    q_of_m,
    scale_to_integer_triad,
    solve_for_m,
)
from .search import search
from .verify import Certificate, Triad, verify_triad

__all__ = [
    "Certificate",
    "DomainError",
    "ParamPoint",
    "RationalTriple",
    "Triad",
    "abc_from_pqu",
    "certify_family",
    "isqrt",
    "p_of_m",
    "perfect_square",
    "q_of_m",
    "rational_square_root",
    "scale_to_integer_triad",
    "search",
    "solve_for_m",
    "verify_triad",
]
