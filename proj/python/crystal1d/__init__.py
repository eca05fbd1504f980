"""Free-energy minimization for one-dimensional crystal shapes.

Thin re-export of the compiled module: potentials with convex sub-level sets,
interval unions, the free-energy functional, the translation optimizer, the
monotone-transport verifier, and the brute-force oracle.
"""

from ._crystal1d import (
    AdmissibilityReport,
    AntiderivativeMode,
    EnergyBreakdown,
    IntervalUnion,
    MinimizerResult,
    NoCandidatesError,
    NotAdmissibleError,
    OracleConfig,
    OracleReport,
    Potential,
    QuadratureNonconvergence,
    RearrangementReport,
    RearrangementSide,
    SpecParseError,
    TransportPlan,
    TransportSegment,
    Violation,
    ViolationKind,
    WrongCaseError,
    ZeroStructure,
    ZeroStructureTag,
    bracket_alpha,
    build_monotone_map,
    check_admissible,
    classify_zero_structure,
    enumerate_candidates,
    free_energy,
    interval_energy_profile,
    load_potential,
    make_abs,
    make_power,
    minimize_translation,
    oracle_minimize,
    potential_energy,
    potential_from_json,
    rearrangement_check,
    stationarity_residual,
    verify_contraction,
    verify_origin_membership,
    verify_pushforward,
    verify_theorem,
    worker_count,
)

__version__ = "1.0.0"

__all__ = [
    "AdmissibilityReport",
    "AntiderivativeMode",
    "EnergyBreakdown",
    "IntervalUnion",
    "MinimizerResult",
    "NoCandidatesError",
    "NotAdmissibleError",
    "OracleConfig",
    "OracleReport",
    "Potential",
    "QuadratureNonconvergence",
    "RearrangementReport",
    "RearrangementSide",
    "SpecParseError",
    "TransportPlan",
    "TransportSegment",
    "Violation",
    "ViolationKind",
    "WrongCaseError",
    "ZeroStructure",
    "ZeroStructureTag",
    "bracket_alpha",
    "build_monotone_map",
    "check_admissible",
    "classify_zero_structure",
    "enumerate_candidates",
    "free_energy",
    "interval_energy_profile",
    "load_potential",
    "make_abs",
    "make_power",
    "minimize_translation",
    "oracle_minimize",
    "potential_energy",
    "potential_from_json",
    "rearrangement_check",
    "stationarity_residual",
    "verify_contraction",
    "verify_origin_membership",
    "verify_pushforward",
    "verify_theorem",
    "worker_count",
]
