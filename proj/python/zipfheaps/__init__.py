"""Generative Zipf text model: distinct-word expectations, exact sampling,
Monte Carlo growth curves, and Heaps/Zipf exponent fitting."""

from zipfheaps._core import (
    ExpectationResult,
    FitResult,
    IdentityForm,
    LowerLimit,
    MCEstimate,
    Method,
    NumericalError,
    RandomStream,
    ReciprocityReport,
    ZipfParams,
    __version__,
    alternating_identity,
    analyze_text,
    asymptotic_expected_distinct,
    closed_form_tail_integral,
    exact_expected_distinct,
    fit_heaps,
    fit_zipf_alpha,
    geometric_checkpoints,
    integral_expected_distinct,
    integrate_semi_infinite,
    log_gamma,
    monte_carlo_distinct,
    per_trial_distinct,
    pmf,
    reciprocity_report,
    sample_rank,
    sample_text,
    simulate_growth_curve,
    tail_mass_bounds,
    tokenize,
    zeta,
    zeta_tail,
)

__all__ = [
    "ExpectationResult",
    "FitResult",
    "IdentityForm",
    "LowerLimit",
    "MCEstimate",
    "Method",
    "NumericalError",
    "RandomStream",
    "ReciprocityReport",
    "ZipfParams",
    "__version__",
    "alternating_identity",
    "analyze_text",
    "asymptotic_expected_distinct",
    "closed_form_tail_integral",
    "exact_expected_distinct",
    "fit_heaps",
    "fit_zipf_alpha",
    "geometric_checkpoints",
    "integral_expected_distinct",
    "integrate_semi_infinite",
    "log_gamma",
    "monte_carlo_distinct",
    "per_trial_distinct",
    "pmf",
    "reciprocity_report",
    "sample_rank",
    "sample_text",
    "simulate_growth_curve",
    "tail_mass_bounds",
    "tokenize",
    "zeta",
    "zeta_tail",
]
