"""Bounds on lattice reduction constants plus an exact enumeration engine.

Everything lives in the compiled extension; this package just re-exports it
under a stable name.
"""

from ._latbound import (  # noqa: F401
    basis_from_gram,
    best_hermite_bound,
    blichfeldt_bound,
    digamma,
    exact_gamma,
    figure1_series,
    figure2_series,
    hanrot_stehle_bound,
    hermite_crossover,
    hermite_ratio,
    is_kz_reduced,
    is_unimodular,
    kz_crossover,
    kz_ratio,
    kz_reduce,
    lll_reduce,
    log_gamma,
    new_bound,
    orthogonality_defect,
    run_hermite_trials,
    run_kz_trials,
    run_proof_checks,
    schnorr_bound,
    svp_shortest,
    wc18_bound,
)

__all__ = [
    "basis_from_gram",
    "best_hermite_bound",
    "blichfeldt_bound",
    "digamma",
    "exact_gamma",
    "figure1_series",
    "figure2_series",
    "hanrot_stehle_bound",
    "hermite_crossover",
    "hermite_ratio",
    "is_kz_reduced",
    "is_unimodular",
    "kz_crossover",
    "kz_ratio",
    "kz_reduce",
    "lll_reduce",
    "log_gamma",
    "new_bound",
    "orthogonality_defect",
    "run_hermite_trials",
    "run_kz_trials",
    "run_proof_checks",
    "schnorr_bound",
    "svp_shortest",
    "wc18_bound",
]
