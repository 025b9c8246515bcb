"""Seeded uniform random gap samples and the Monte Carlo entropy comparison.

Randomness comes from SplitMix64, a fixed published 64-bit mixing generator,
used here in counter mode: output k of stream `seed` is

    mix64(seed + (k+1) * 0x9E3779B97F4A7C15)

which is bit-identical to the reference sequential form (state += golden
gamma, then mix) while allowing whole batches of outputs to be computed at
once.  Reference outputs for seed 0 start 0xE220A8397B1DCDAF,
0x6E789E6AA1B965F4, 0x06C45D188009454F.

Uniform integers in [0, m) are taken by rejection: a raw 64-bit output u is
accepted iff u < 2^64 - (2^64 mod m), and then reduced as u mod m, so every
residue is exactly equally likely.  Draws consume stream outputs in order
(rejected outputs are skipped), which makes results independent of internal
batch sizes.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

import numpy as np

from .entropy import EntropyEstimate, EntropyKind, discrete_entropy, empirical_gap_entropy
from .errors import DomainError
from .sieve import gap_histogram

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_BATCH = 1 << 16


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def _uniform_ints(seed: int, count: int, m: int) -> np.ndarray:
    """`count` unbiased draws from [0, m) off the SplitMix64 stream `seed`."""
    remainder = (1 << 64) % m
    accept_below = np.uint64((1 << 64) - remainder) if remainder else None
    seed64 = np.uint64(seed & ((1 << 64) - 1))
    out = np.empty(count, dtype=np.uint64)
    filled = 0
    k = np.uint64(1)
    with np.errstate(over="ignore"):  # uint64 wrap-around is the algorithm
        while filled < count:
            counters = seed64 + (k + np.arange(_BATCH, dtype=np.uint64)) * _GOLDEN
            k += np.uint64(_BATCH)
            raw = _mix64(counters)
            accepted = raw if accept_below is None else raw[raw < accept_below]
            take = min(accepted.size, count - filled)
            out[filled : filled + take] = accepted[:take]
            filled += take
    return (out % np.uint64(m)).astype(np.int64)


@dataclass(frozen=True, eq=False)
class GapSample:
    """Uniform i.i.d. draws over the even integers of [min_gap, max_gap]."""

    seed: int
    count: int
    min_gap: int
    max_gap: int
    values: np.ndarray

    def to_csv(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(
                f"# gap sample: seed={self.seed} count={self.count} "
                f"min={self.min_gap} max={self.max_gap}\n"
            )
            fh.write("index,gap\n")
            for i, v in enumerate(self.values):
                fh.write(f"{i},{int(v)}\n")


def generate(seed: int, count: int, min_gap: int = 2, max_gap: int = 100) -> GapSample:
    """Deterministic uniform sample over even gap values in [min_gap, max_gap]."""
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    if min_gap < 2 or min_gap % 2:
        raise DomainError(f"min_gap must be an even integer >= 2, got {min_gap}")
    if max_gap <= min_gap or max_gap % 2:
        raise DomainError(f"max_gap must be an even integer > min_gap, got {max_gap}")
    n_symbols = (max_gap - min_gap) // 2 + 1
    draws = _uniform_ints(seed, count, n_symbols)
    values = min_gap + 2 * draws
    values.setflags(write=False)
    return GapSample(seed=seed, count=count, min_gap=min_gap, max_gap=max_gap, values=values)


def sample_entropy(sample: GapSample) -> EntropyEstimate:
    """Shannon entropy of the sample's empirical symbol distribution."""
    symbols, counts = np.unique(sample.values, return_counts=True)
    est = discrete_entropy({int(s): int(c) for s, c in zip(symbols, counts)})
    return EntropyEstimate(
        value=est.value,
        kind=EntropyKind.discrete_empirical,
        support_description=(
            f"random gap sample, {sample.count} draws over even values "
            f"[{sample.min_gap}, {sample.max_gap}]"
        ),
    )


@dataclass(frozen=True)
class MonteCarloSummary:
    x_max: float
    trials: int
    seed: int
    count: int
    max_gap: int
    h_prime_gaps: float
    fraction_prime_below_random: float
    random_entropy_mean: float
    random_entropy_min: float
    random_entropy_max: float

    def to_dict(self) -> dict:
        return {
            "log_convention": "natural (nats)",
            "x_max": self.x_max,
            "trials": self.trials,
            "seed": self.seed,
            "count": self.count,
            "max_gap": self.max_gap,
            "h_prime_gaps": self.h_prime_gaps,
            "fraction_prime_below_random": self.fraction_prime_below_random,
            "random_entropy_mean": self.random_entropy_mean,
            "random_entropy_min": self.random_entropy_min,
            "random_entropy_max": self.random_entropy_max,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def monte_carlo_theorem_check(x_max: float, trials: int, seed: int = 1) -> MonteCarloSummary:
    """Fraction of trials where the prime-gap entropy stays below the random one.

    Each trial draws count = pi(x_max) - 1 gaps uniformly from the even values
    of [2, G(x_max)] using per-trial seed = seed + trial_index, then compares
    entropies.  The whole summary is a pure function of (x_max, trials, seed).
    """
    if x_max < 1e4:
        raise DomainError(f"monte_carlo_theorem_check requires x_max >= 1e4, got {x_max}")
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")

    hist = gap_histogram(int(x_max))
    h_prime = empirical_gap_entropy(hist).value
    count = hist.total_gaps
    G = max(hist.counts)

    entropies = []
    below = 0
    for trial in range(trials):
        sample = generate(seed + trial, count, min_gap=2, max_gap=G)
        h_rand = sample_entropy(sample).value
        entropies.append(h_rand)
        if h_prime < h_rand:
            below += 1

    return MonteCarloSummary(
        x_max=float(x_max),
        trials=trials,
        seed=seed,
        count=count,
        max_gap=G,
        h_prime_gaps=h_prime,
        fraction_prime_below_random=below / trials,
        random_entropy_mean=float(np.mean(entropies)),
        random_entropy_min=float(np.min(entropies)),
        random_entropy_max=float(np.max(entropies)),
    )
