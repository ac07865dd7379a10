"""Forcibly hamiltonian degree sequences: predicates, generators, witnesses and
an exhaustive verifier."""

from hamseq.degseq import (
    ChvatalResult,
    DegreeSequence,
    chvatal_condition,
    chvatal_extremal_sequence,
    eg_strength,
    is_exception_sequence,
    is_graphical,
    majorizes,
    matches_theorem_2_3_shape,
    normalize,
)
from hamseq.errors import (
    HamseqError,
    InvalidDegree,
    InvalidEdge,
    InvalidParams,
    LengthMismatch,
    ShapeMismatch,
    TooSmall,
)
from hamseq.graphkit import (
    SimpleGraph,
    build_cnk,
    build_exception_graph,
    build_graph,
    circumference,
    closure,
    degree_sequence,
    enumerate_realizations,
    havel_hakimi_realize,
    is_biconnected,
    is_hamiltonian,
)
from hamseq.nwgen import (
    NwParams,
    PiPrime,
    count_lower_bound,
    count_total_lower_bound,
    enumerate_nw_sequences,
    enumerate_pi_primes,
    foundational_sequences,
    nw_construct,
)
from hamseq.verify import (
    VerificationReport,
    Verdict,
    check_nw_theorem,
    classify,
    dirac_property_check,
    verify_forcibly_hamiltonian,
)

__version__ = "0.1.0"

__all__ = [
    "ChvatalResult",
    "DegreeSequence",
    "chvatal_condition",
    "chvatal_extremal_sequence",
    "eg_strength",
    "is_exception_sequence",
    "is_graphical",
    "majorizes",
    "matches_theorem_2_3_shape",
    "normalize",
    "HamseqError",
    "InvalidDegree",
    "InvalidEdge",
    "InvalidParams",
    "LengthMismatch",
    "ShapeMismatch",
    "TooSmall",
    "SimpleGraph",
    "build_cnk",
    "build_exception_graph",
    "build_graph",
    "circumference",
    "closure",
    "degree_sequence",
    "enumerate_realizations",
    "havel_hakimi_realize",
    "is_biconnected",
    "is_hamiltonian",
    "NwParams",
    "PiPrime",
    "count_lower_bound",
    "count_total_lower_bound",
    "enumerate_nw_sequences",
    "enumerate_pi_primes",
    "foundational_sequences",
    "nw_construct",
    "VerificationReport",
    "Verdict",
    "check_nw_theorem",
    "classify",
    "dirac_property_check",
    "verify_forcibly_hamiltonian",
]
