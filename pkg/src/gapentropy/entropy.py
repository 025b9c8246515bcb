"""Entropy measures of gap distributions, all in nats (natural logarithm).

Discrete Shannon entropy of empirical histograms, the two continuous uniform
baselines ln(x/ln x - 2) and ln(G - 2), the multiplicity-weighted entropy of
an integer's factorization, the Chebyshev-style sum of ln p / p, and the
smooth-envelope integral of ln(ln ln k)/ln ln k.

The envelope integrand is undefined for k <= e and is not integrable at
k = e: near the endpoint it behaves like e*(ln u)/u in u = k - e, so the
integral grows like (ln delta)^2 as the cutoff shrinks.  We therefore
integrate over [e + delta, upper] with an explicit cutoff.  At upper values
around 1e7 the omitted mass (a few hundred at delta = 1e-6) is negligible
relative to the total; at small upper values it is not, and the result
genuinely depends on delta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import quad

from .bounds import EULER_GAMMA
from .errors import DomainError
from .sieve import GapHistogram, PrimeRange, primes_up_to

E = math.e

# Trial division is delegated to the sieve's prime list up to this bound;
# rare larger cofactors fall back to a 6k+-1 wheel.
_FACTOR_SIEVE_CAP = 1_000_000


class EntropyKind(str, Enum):
    discrete_empirical = "discrete_empirical"
    continuous_uniform_reals = "continuous_uniform_reals"
    continuous_uniform_gaps = "continuous_uniform_gaps"
    factorization = "factorization"
    envelope_integral = "envelope_integral"


@dataclass(frozen=True)
class EntropyEstimate:
    value: float
    kind: EntropyKind
    support_description: str


@dataclass(frozen=True)
class FactorizationProfile:
    """n = prod p_i^a_i with big_omega = sum a_i (multiplicities counted)."""

    n: int
    factors: tuple[tuple[int, int], ...]
    big_omega: int


def discrete_entropy(distribution: dict) -> EntropyEstimate:
    """-sum p_i ln p_i for p_i = count_i / total.

    Counts may be any positive numbers; scaling all of them by a common
    factor leaves the value unchanged.
    """
    if not distribution:
        raise DomainError("discrete_entropy requires at least one symbol")
    counts = list(distribution.values())
    if any(c <= 0 for c in counts):
        raise DomainError("all counts must be > 0")
    total = float(sum(counts))
    h = 0.0
    for c in counts:
        p = c / total
        h -= p * math.log(p)
    # Clamp the tiny negative rounding that a one-symbol distribution can leave.
    h = h if h > 0.0 else 0.0
    return EntropyEstimate(
        value=h,
        kind=EntropyKind.discrete_empirical,
        support_description=f"{len(counts)} symbols, total weight {total:g}",
    )


def empirical_gap_entropy(hist: GapHistogram, exclude_gap_one: bool = False) -> EntropyEstimate:
    """Shannon entropy of a prime-gap histogram, optionally dropping gap 1."""
    counts = dict(hist.counts)
    if exclude_gap_one:
        counts.pop(1, None)
    if not counts:
        raise DomainError("no gaps left after excluding gap 1")
    est = discrete_entropy(counts)
    gap_note = "gap 1 excluded" if exclude_gap_one else "gap 1 included"
    return EntropyEstimate(
        value=est.value,
        kind=EntropyKind.discrete_empirical,
        support_description=f"prime gaps up to {hist.limit}, {gap_note}",
    )


def h_real(x_max: float) -> EntropyEstimate:
    """ln(x_max/ln x_max - 2): entropy of a uniform density on the ~pi(x) reals.

    x/ln x has minimum e > 2 on x > 1, so the argument is always positive.
    """
    if x_max <= 1:
        raise DomainError(f"h_real requires x_max > 1, got {x_max}")
    return EntropyEstimate(
        value=math.log(x_max / math.log(x_max) - 2),
        kind=EntropyKind.continuous_uniform_reals,
        support_description=f"uniform on an interval of length x/ln x - 2, x = {x_max:g}",
    )


def h_uniform_gaps(G: float) -> EntropyEstimate:
    """ln(G - 2): entropy of a uniform density on gap values in [2, G]."""
    if G <= 2:
        raise DomainError(f"h_uniform_gaps requires G > 2, got {G}")
    return EntropyEstimate(
        value=math.log(G - 2),
        kind=EntropyKind.continuous_uniform_gaps,
        support_description=f"uniform on [2, {G:g}]",
    )


def _factor(n: int) -> list[tuple[int, int]]:
    factors: list[tuple[int, int]] = []
    rem = n
    for p in primes_up_to(PrimeRange(limit=min(math.isqrt(n), _FACTOR_SIEVE_CAP) + 1)):
        p = int(p)
        if p * p > rem:
            break
        if rem % p:
            continue
        a = 0
        while rem % p == 0:
            rem //= p
            a += 1
        factors.append((p, a))
    if rem > _FACTOR_SIEVE_CAP**2:
        # Composite cofactor is possible only above CAP^2 (no factor <= CAP
        # survives the loop above); finish with odd trial divisors.
        d = _FACTOR_SIEVE_CAP + 1 + (_FACTOR_SIEVE_CAP % 2)
        while d * d <= rem:
            if rem % d == 0:
                a = 0
                while rem % d == 0:
                    rem //= d
                    a += 1
                factors.append((d, a))
            d += 2
    if rem > 1:
        factors.append((rem, 1))
    return factors


def factorization_entropy(n: int) -> tuple[FactorizationProfile, EntropyEstimate]:
    """H(n) = ln Omega(n) - (1/Omega(n)) * sum a_i ln a_i.

    Zero exactly when n is a prime power (a single a_i = Omega).
    """
    if n < 2:
        raise DomainError(f"factorization_entropy requires n >= 2, got {n}")
    factors = _factor(int(n))
    omega = sum(a for _, a in factors)
    h = math.log(omega) - sum(a * math.log(a) for _, a in factors) / omega
    h = h if h > 0.0 else 0.0
    profile = FactorizationProfile(n=int(n), factors=tuple(factors), big_omega=omega)
    est = EntropyEstimate(
        value=h,
        kind=EntropyKind.factorization,
        support_description=f"Omega({n}) = {omega} prime factors with multiplicity",
    )
    return profile, est


def entropy_loss_constant() -> float:
    """(1 - gamma)/ln 2, the per-bit entropy deficit constant."""
    return (1.0 - EULER_GAMMA) / math.log(2.0)


def chebyshev_C(n: int) -> float:
    """sum of ln p / p over primes p <= n; grows like ln n."""
    if n < 2:
        raise DomainError(f"chebyshev_C requires n >= 2, got {n}")
    primes = primes_up_to(PrimeRange(limit=math.floor(n))).astype(np.float64)
    return float(np.sum(np.log(primes) / primes))


def _envelope_integrand(k: float) -> float:
    L = math.log(math.log(k))
    return math.log(L) / L


def envelope_entropy_integral(upper: float, lower_cutoff_delta: float = 1e-6) -> float:
    """Integral of ln(ln ln k)/ln ln k over [e + delta, upper].

    The stretch next to k = e is integrated in u = ln(k - e), which turns the
    ln(u)/u blow-up into a smooth integrand; the rest is handled directly with
    a split at k = e^e where the integrand changes sign.  A first coarse pass
    sets the absolute tolerance of the final pass to 1e-6 * |estimate|.
    """
    delta = lower_cutoff_delta
    if delta <= 0:
        raise DomainError(f"lower_cutoff_delta must be > 0, got {delta}")
    if upper <= E + delta:
        raise DomainError(f"upper must exceed e + delta = {E + delta}, got {upper}")

    lower = E + delta
    split = min(upper, E + 1e-3)

    def _transformed(u: float) -> float:
        ku = math.exp(u)
        return _envelope_integrand(E + ku) * ku

    def _evaluate(epsabs: float, epsrel: float) -> float:
        total = 0.0
        if split > lower:
            part, _ = quad(
                _transformed, math.log(delta), math.log(split - E),
                epsabs=epsabs, epsrel=epsrel, limit=400,
            )
            total += part
        start = max(split, lower)
        if upper > start:
            e_to_e = math.exp(E)
            pts = [e_to_e] if start < e_to_e < upper else None
            part, _ = quad(
                _envelope_integrand, start, upper,
                points=pts, epsabs=epsabs, epsrel=epsrel, limit=400,
            )
            total += part
        return total

    coarse = _evaluate(epsabs=1e-8, epsrel=1e-6)
    return _evaluate(epsabs=1e-6 * max(abs(coarse), 1e-12), epsrel=1e-10)
