"""Entropy measures of prime-gap distributions.

Segmented sieve and gap statistics, Shannon/factorization entropy in nats,
a catalogue of prime-gap bound formulas, numerical re-derivation of the
catalogue's published thresholds (including log-domain towers for values far
beyond float range), and seeded Monte Carlo comparison against uniformly
random gap samples.  All logarithms are natural.
"""

from .bounds import (
    EULER_GAMMA,
    REGISTRY,
    WOLF_C,
    ZHANG_CONSTANT,
    BoundEvaluation,
    BoundFunction,
    BoundId,
    baker_harman_G,
    cramer_G,
    cramer_rh_G,
    evaluable_ids,
    evaluate,
    export_registry,
    granville_G,
    heath_brown_G,
    jaroma_pow,
    mertens_f,
    pnt_nth,
    robin_upper,
    sinha_G,
    wolf_G,
    zhang_bound,
)
from .entropy import (
    EntropyEstimate,
    EntropyKind,
    FactorizationProfile,
    chebyshev_C,
    discrete_entropy,
    empirical_gap_entropy,
    entropy_loss_constant,
    envelope_entropy_integral,
    factorization_entropy,
    h_real,
    h_uniform_gaps,
)
from .errors import BracketError, ConvergenceError, DomainError
from .randgaps import GapSample, MonteCarloSummary, generate, monte_carlo_theorem_check, sample_entropy
from .report import emit_plot_series, render_report
from .sieve import (
    GapHistogram,
    PrimeRange,
    cache_path,
    gap_histogram,
    load_histogram,
    max_gap,
    next_prime_above,
    nth_prime,
    prime_count,
    primes_up_to,
    save_histogram,
)
from .thresholds import (
    ClaimKind,
    ClaimResult,
    EntropyComparison,
    LogDomainNumber,
    Status,
    ThresholdClaim,
    VerificationReport,
    claim_registry,
    compare_entropies,
    solve_crossover,
    verify_all,
)
from .version import __version__

__all__ = [
    "__version__",
    "BoundEvaluation",
    "BoundFunction",
    "BoundId",
    "BracketError",
    "ClaimKind",
    "ClaimResult",
    "ConvergenceError",
    "DomainError",
    "EntropyComparison",
    "EntropyEstimate",
    "EntropyKind",
    "EULER_GAMMA",
    "FactorizationProfile",
    "GapHistogram",
    "GapSample",
    "LogDomainNumber",
    "MonteCarloSummary",
    "PrimeRange",
    "REGISTRY",
    "Status",
    "ThresholdClaim",
    "VerificationReport",
    "WOLF_C",
    "ZHANG_CONSTANT",
    "baker_harman_G",
    "cache_path",
    "chebyshev_C",
    "claim_registry",
    "compare_entropies",
    "cramer_G",
    "cramer_rh_G",
    "discrete_entropy",
    "emit_plot_series",
    "empirical_gap_entropy",
    "entropy_loss_constant",
    "envelope_entropy_integral",
    "evaluable_ids",
    "evaluate",
    "export_registry",
    "factorization_entropy",
    "gap_histogram",
    "generate",
    "granville_G",
    "h_real",
    "h_uniform_gaps",
    "heath_brown_G",
    "jaroma_pow",
    "load_histogram",
    "max_gap",
    "mertens_f",
    "monte_carlo_theorem_check",
    "next_prime_above",
    "nth_prime",
    "pnt_nth",
    "prime_count",
    "primes_up_to",
    "render_report",
    "robin_upper",
    "sample_entropy",
    "save_histogram",
    "sinha_G",
    "solve_crossover",
    "verify_all",
    "wolf_G",
    "zhang_bound",
]
