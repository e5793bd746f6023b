"""Exact per-season autocovariances of causal periodic ARMA (PARMA) models."""

from ._core import (
    AutocovTable,
    CausalityReport,
    NoiseKind,
    NotCausalError,
    ParmaError,
    ParmaModel,
    PsiTable,
    SimulatedSeries,
    YuleWalkerSystem,
    acf_ma_infinity,
    assemble_system,
    autocov_at,
    check_causality,
    companion_matrix,
    compute_autocovariances,
    compute_psi,
    extend_autocovariances,
    folded_phi_block,
    load_model_file,
    parse_model_json,
    phi_block,
    sample_periodic_acov,
    season_wrap,
    simulate,
    solve_startup,
    substream_seed,
    verify_residuals,
)

__version__ = "0.1.0"

__all__ = [
    "AutocovTable",
    "CausalityReport",
    "NoiseKind",
    "NotCausalError",
    "ParmaError",
    "ParmaModel",
    "PsiTable",
    "SimulatedSeries",
    "YuleWalkerSystem",
    "acf_ma_infinity",
    "assemble_system",
    "autocov_at",
    "check_causality",
    "companion_matrix",
    "compute_autocovariances",
    "compute_psi",
    "extend_autocovariances",
    "folded_phi_block",
    "load_model_file",
    "parse_model_json",
    "phi_block",
    "sample_periodic_acov",
    "season_wrap",
    "simulate",
    "solve_startup",
    "substream_seed",
    "verify_residuals",
]
