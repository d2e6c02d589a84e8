"""Exact matrix powers and symmetric-function identities via Cayley-Hamilton."""

from .exactnum import QuadRat, Rational, binom, multinomial
from .matpower import Matrix, char_coeffs, power_closed_form, pow_binary, thm2_coeffs
from .mpoly import MPoly, complete_homogeneous, elem_sym
from .report import IdentityReport
from .symfun import a_seq, gen_fib, hom_lhs, thm1_rhs

__all__ = [
    "IdentityReport",
    "MPoly",
    "Matrix",
    "QuadRat",
    "Rational",
    "a_seq",
    "binom",
    "char_coeffs",
    "complete_homogeneous",
    "elem_sym",
    "gen_fib",
    "hom_lhs",
    "multinomial",
    "pow_binary",
    "power_closed_form",
    "thm1_rhs",
    "thm2_coeffs",
]
__version__ = "0.1.0"
