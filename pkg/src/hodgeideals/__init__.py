"""Hodge ideals of effective Q-divisors on affine space.

Exact-rational computation of the ideals I_k(D) in the regimes with
closed forms (smooth support, simple normal crossings, ordinary
singularities) and through the derivation-closure recursion, plus
inequality certificates from log-resolution data and executable
property suites for the structural theorems.
"""

from .poly import GREVLEX, GRLEX, LEX, MonomialOrder, Polynomial, Rational
from .ideal import GroebnerBasis, Ideal, groebner_basis, normal_form
from .parser import ParseError, parse_divisor, parse_polynomial, parse_rational, \
    parse_resolution_data
from .divisor import (
    HodgeIdealResult,
    QDivisor,
    SupportEquation,
    periodic_reduce,
    primed_to_unprimed,
    round_up,
    support,
    twist_polynomial,
    validate,
)
from .closed_forms import (
    OrdinarySingularityModel,
    WeightVector,
    alpha_tilde_quasihomogeneous,
    generation_level,
    node_ideal,
    ordinary_ideal,
    smooth_support_ideal,
    snc_hodge_ideal,
    snc_reduced_ideal,
)
from .recursion import (
    ChainResult,
    GenerationCertificate,
    certificate_for,
    derivation_step,
    hodge_chain,
    i0_seed,
)
from .certificates import (
    Decision,
    ExceptionalDivisor,
    MultiplicityData,
    ResolutionData,
    alpha_multiple_membership,
    nontriviality_symbolic_power,
    singular_multiplicity_bound,
    smoothness_test,
    triviality_certificate,
)
from .compute import MethodUnavailableError, compute_chain, compute_ideal

__all__ = [
    "GREVLEX", "GRLEX", "LEX", "MonomialOrder", "Polynomial", "Rational",
    "GroebnerBasis", "Ideal", "groebner_basis", "normal_form",
    "ParseError", "parse_divisor", "parse_polynomial", "parse_rational",
    "parse_resolution_data",
    "HodgeIdealResult", "QDivisor", "SupportEquation", "periodic_reduce",
    "primed_to_unprimed", "round_up", "support", "twist_polynomial", "validate",
    "OrdinarySingularityModel", "WeightVector", "alpha_tilde_quasihomogeneous",
    "generation_level", "node_ideal", "ordinary_ideal", "smooth_support_ideal",
    "snc_hodge_ideal", "snc_reduced_ideal",
    "ChainResult", "GenerationCertificate", "certificate_for", "derivation_step",
    "hodge_chain", "i0_seed",
    "Decision", "ExceptionalDivisor", "MultiplicityData", "ResolutionData",
    "alpha_multiple_membership", "nontriviality_symbolic_power",
    "singular_multiplicity_bound", "smoothness_test", "triviality_certificate",
    "MethodUnavailableError", "compute_chain", "compute_ideal",
]
