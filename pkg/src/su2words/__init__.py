"""Fricke trace polynomials of F2 words and SU(2) word-map surjectivity."""

from .words import (
    Word,
    WordSyntaxError,
    WordLengthError,
    parse_word,
    render,
    concat,
    inverse,
    power,
    commutator,
    conjugate,
    canonical_trace_key,
)
from .polynomials import TracePolynomial, kappa, reduce_mod_kappa, divmod_kappa
from .engine import TraceEngine, EngineBudgetError
from .chebyshev import ChebyshevU, chebyshev_u, matrix_power_expand, closed_form
from .region import TracePoint, in_region, grid, point_from_pair
from .su2 import SU2Element, evaluate_word, random_element, realize_point
from .surjectivity import (
    CommutatorSystem,
    SurjectivityCertificate,
    build_system,
    find_witness,
    attains_minus_two,
    check_family,
    case_analysis_x0,
)

__version__ = "0.1.0"
