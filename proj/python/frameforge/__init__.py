"""Gramian field analysis for systems of integer translates.

Evaluates matrix-valued spectral fields of generator sets on the torus,
classifies the resulting systems of translates, and certifies whether a
coefficient matrix carries one frame generator set to another.
"""

from ._core import (
    CertifyOptions,
    CheckResult,
    ClassifyOptions,
    FieldCache,
    FrameforgeError,
    FrameReport,
    GramianField,
    HermitianSpectrum,
    ReductionCertificate,
    SamplingGrid,
    ScanResult,
    Scenario,
    SquareCaseReport,
    Subspace,
    ToleranceConfig,
    Verdict,
    Witness,
    angle_profile,
    builtin_scenario,
    builtin_scenario_names,
    certificate_json,
    certify_analytic,
    certify_both,
    certify_geometric,
    classify,
    conjugate,
    frame_bounds,
    frame_report_json,
    friedrichs_cos,
    friedrichs_sin,
    gramian_at,
    hermitian_eig,
    image_projector,
    intersect,
    is_frame_verdict,
    kernel_projector,
    kernel_shortcut,
    length_of,
    load_scenario,
    numerical_rank,
    operator_norm,
    pinv,
    preserves_generators,
    profile_csv,
    reduce_to_cell,
    resolve_scenario,
    run_verification_check,
    run_verification_checks,
    sandwich_bounds,
    save_scenario,
    scan_generic,
    scan_json,
    scenario_from_json,
    scenario_to_json,
    square_case,
    verdict_name,
    verification_check_names,
)

__all__ = [
    "CertifyOptions",
    "CheckResult",
    "ClassifyOptions",
    "FieldCache",
    "FrameforgeError",
    "FrameReport",
    "GramianField",
    "HermitianSpectrum",
    "ReductionCertificate",
    "SamplingGrid",
    "ScanResult",
    "Scenario",
    "SquareCaseReport",
    "Subspace",
    "ToleranceConfig",
    "Verdict",
    "Witness",
    "angle_profile",
    "builtin_scenario",
    "builtin_scenario_names",
    "certificate_json",
    "certify_analytic",
    "certify_both",
    "certify_geometric",
    "classify",
    "conjugate",
    "frame_bounds",
    "frame_report_json",
    "friedrichs_cos",
    "friedrichs_sin",
    "gramian_at",
    "hermitian_eig",
    "image_projector",
    "intersect",
    "is_frame_verdict",
    "kernel_projector",
    "kernel_shortcut",
    "length_of",
    "load_scenario",
    "numerical_rank",
    "operator_norm",
    "pinv",
    "preserves_generators",
    "profile_csv",
    "reduce_to_cell",
    "resolve_scenario",
    "run_verification_check",
    "run_verification_checks",
    "sandwich_bounds",
    "save_scenario",
    "scan_generic",
    "scan_json",
    "scenario_from_json",
    "scenario_to_json",
    "square_case",
    "verdict_name",
    "verification_check_names",
]

__version__ = "0.1.0"
