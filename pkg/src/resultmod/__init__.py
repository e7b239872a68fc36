"""Exact polynomial resultants, common roots modulo a prime, and the
prime-power congruences they imply (including Lucas-sequence congruences)."""

__version__ = "0.1.0"

from .linalg import INF, IntMatrix, ModMatrix, det_exact, rank_mod, reduce_mod, rref_mod, valuation
from .lucas import LucasParams, check_corollary2, check_theorem4, lucas_v_exact, lucas_v_mod
from .modular import ModAnalysis, analyze, check_theorem2, check_theorem3, common_roots, roots_mod
from .parser import ParseError, parse_poly
from .poly import IntPolynomial, RatPolynomial, format_poly
from .reports import CongruenceReport
from .resultants import (
    cyclotomic_style_resultant,
    resultant,
    resultant_euclidean,
    resultant_remainder_matrix,
    resultant_sylvester,
)

__all__ = [
    "INF",
    "CongruenceReport",
    "IntMatrix",
    "IntPolynomial",
    "LucasParams",
    "ModAnalysis",
    "ModMatrix",
    "ParseError",
    "RatPolynomial",
    "analyze",
    "check_corollary2",
    "check_theorem2",
    "check_theorem3",
    "check_theorem4",
    "common_roots",
    "cyclotomic_style_resultant",
    "det_exact",
    "format_poly",
    "lucas_v_exact",
    "lucas_v_mod",
    "parse_poly",
    "rank_mod",
    "reduce_mod",
    "resultant",
    "resultant_euclidean",
    "resultant_remainder_matrix",
    "resultant_sylvester",
    "roots_mod",
    "rref_mod",
    "valuation",
]
