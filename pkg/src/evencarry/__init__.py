"""Characters of the cohomology of line bundles on the incidence correspondence
in positive characteristic: even-carry and Nim polynomials, recurrences, an
F_p oracle, and tile combinatorics for Prim polynomials."""

from .carrycomb import even_carry_poly, even_carry_poly_digits, is_even_carry, nim_poly
from .charring import Character
from .formulas import (kappa_char0, kappa_even_carry, kappa_gao_p2, kappa_nim_p2,
                       kappa_recurrence)
from .schur import complete, elementary, ms, schur, trunc_schur2, trunc_sym

__version__ = "0.1.0"

__all__ = [
    "Character", "complete", "elementary", "even_carry_poly", "even_carry_poly_digits",
    "is_even_carry", "kappa_char0", "kappa_even_carry", "kappa_gao_p2", "kappa_nim_p2",
    "kappa_recurrence", "ms", "nim_poly", "schur", "trunc_schur2", "trunc_sym",
]
