"""Exact tools for deciding when homogeneous polynomials form a regular sequence."""

from .gaussian import GaussianRational, I
from .macaulay import MacaulayMatrix, build_macaulay, critical_degree, is_regular_sequence, rank_exact
from .numtheory import cyclotomic, euler_phi, factorize, gcd_with_factorial
from .parser import ParseError, format_polynomial, parse_polynomial, parse_polynomials
from .perturb import (
    RealEnclosure,
    distance,
    graded_piece_dimension,
    is_column_diagonally_dominant,
    near_powers_certificate,
)
from .poly import Polynomial, coordinate_vector, evaluate, monomials_of_degree
from .powersum import (
    APSpec,
    ExponentSet,
    RootOfUnityWitness,
    ap_certificate,
    factorial_divisibility_equivalence,
    necessary_condition,
    normalize_exponents,
    power_sum,
    power_sums,
    vanishing_sum_search,
    verify_witness,
    witness_search,
)
from .report import Inconclusive, MatrixTooLarge, Method, RegSeqError, RegularityReport, Verdict

__version__ = "0.1.0"
