"""Witness certificates: construction, serialization and verification."""

from .certificate import (
    CERT_FORMAT,
    CERT_VERSION,
    CertificateFormatError,
    WitnessCertificate,
    dumps,
    load,
    loads,
    save,
)
from .constructions import (
    DEFAULT_BUDGET,
    Budget,
    BudgetExhausted,
    PairIrrevFrame,
    certify,
    extend_certificate,
    theorem35_frames,
    witness_generic,
    witness_negative_slope,
    witness_one_species,
    witness_positive_slope,
    witness_slope_minus_one,
    witness_theorem35,
    witness_three_term,
    witness_zigzag_lift,
)
from .search import reduce_and_witness, witness_search, witness_two_pairs
from .substitution import (
    ShapeError,
    Substitution,
    make_substitution,
    mass_action_rhs,
    substituted_polynomial,
    window_of,
)
from .verify import VerificationReport, verify_certificate

__all__ = [
    "CERT_FORMAT",
    "CERT_VERSION",
    "DEFAULT_BUDGET",
    "Budget",
    "BudgetExhausted",
    "CertificateFormatError",
    "PairIrrevFrame",
    "ShapeError",
    "Substitution",
    "VerificationReport",
    "WitnessCertificate",
    "certify",
    "dumps",
    "extend_certificate",
    "load",
    "loads",
    "make_substitution",
    "mass_action_rhs",
    "reduce_and_witness",
    "save",
    "substituted_polynomial",
    "theorem35_frames",
    "verify_certificate",
    "window_of",
    "witness_generic",
    "witness_negative_slope",
    "witness_one_species",
    "witness_positive_slope",
    "witness_search",
    "witness_slope_minus_one",
    "witness_theorem35",
    "witness_three_term",
    "witness_two_pairs",
    "witness_zigzag_lift",
]
