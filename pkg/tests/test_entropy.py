"""Entropy measures: discrete, continuous baselines, factorization, envelope."""

from __future__ import annotations

import math
import random

import pytest

from gapentropy import (
    DomainError,
    EntropyKind,
    chebyshev_C,
    discrete_entropy,
    empirical_gap_entropy,
    entropy_loss_constant,
    envelope_entropy_integral,
    factorization_entropy,
    gap_histogram,
    h_real,
    h_uniform_gaps,
)
from conftest import oracle_factor, oracle_primes

E = math.e


# --- discrete Shannon entropy -------------------------------------------------

def test_uniform_distribution_gives_ln_k():
    for k in (2, 3, 10, 64):
        est = discrete_entropy({i: 7 for i in range(k)})
        assert est.value == pytest.approx(math.log(k), rel=1e-12)
        assert est.kind is EntropyKind.discrete_empirical


def test_single_symbol_entropy_is_positive_zero():
    est = discrete_entropy({4: 123})
    assert est.value == 0.0
    assert math.copysign(1.0, est.value) == 1.0


def test_entropy_scale_invariance():
    rng = random.Random(31)
    for _ in range(10):
        dist = {i: rng.randrange(1, 50) for i in range(rng.randrange(1, 8))}
        scaled = {k: 13 * v for k, v in dist.items()}
        assert discrete_entropy(dist).value == pytest.approx(
            discrete_entropy(scaled).value, abs=1e-12
        )


def test_entropy_below_ln_k_and_nonnegative():
    rng = random.Random(5150)
    for _ in range(25):
        k = rng.randrange(1, 12)
        dist = {i: rng.randrange(1, 100) for i in range(k)}
        h = discrete_entropy(dist).value
        assert 0.0 <= h <= math.log(k) + 1e-12


def test_discrete_entropy_domain():
    with pytest.raises(DomainError):
        discrete_entropy({})
    with pytest.raises(DomainError):
        discrete_entropy({1: 3, 2: 0})
    with pytest.raises(DomainError):
        discrete_entropy({1: -1})


# --- empirical gap entropy ----------------------------------------------------

def test_gap_entropy_small_case_by_hand():
    # Gaps up to 10 are {1: 1, 2: 2}: H = ln 3 - (2/3) ln 2.
    est = empirical_gap_entropy(gap_histogram(10))
    assert est.value == pytest.approx(math.log(3) - (2 / 3) * math.log(2), rel=1e-12)
    assert est.value == pytest.approx(0.6365141682948128, rel=1e-12)


def test_gap_entropy_frozen_values():
    h4 = empirical_gap_entropy(gap_histogram(10**4))
    assert h4.value == pytest.approx(2.199068318579715, rel=1e-10)
    h6 = empirical_gap_entropy(gap_histogram(10**6))
    assert h6.value == pytest.approx(2.709960686420036, rel=1e-10)


def test_gap_entropy_exclude_gap_one():
    h4x = empirical_gap_entropy(gap_histogram(10**4), exclude_gap_one=True)
    assert h4x.value == pytest.approx(2.1942487044693357, rel=1e-10)
    # Excluding the single odd gap barely moves the estimate but must move it.
    h4 = empirical_gap_entropy(gap_histogram(10**4))
    assert h4x.value != h4.value
    with pytest.raises(DomainError):
        empirical_gap_entropy(gap_histogram(4), exclude_gap_one=True)


# --- continuous baselines -----------------------------------------------------

def test_h_real_closed_form():
    assert h_real(E * E).value == pytest.approx(math.log(E * E / 2 - 2), rel=1e-14)
    assert h_real(93.3545).value == pytest.approx(2.922030018765294, rel=1e-12)
    assert h_real(10**6).value == pytest.approx(11.189691012085405, rel=1e-12)
    with pytest.raises(DomainError):
        h_real(1.0)


def test_h_uniform_gaps():
    assert h_uniform_gaps(36).value == pytest.approx(math.log(34), rel=1e-14)
    assert h_uniform_gaps(114).value == pytest.approx(math.log(112), rel=1e-14)
    with pytest.raises(DomainError):
        h_uniform_gaps(2.0)


# --- factorization entropy ----------------------------------------------------

def test_factorization_entropy_prime_and_prime_power_are_zero():
    for n in (2, 97, 1024, 3**7):
        profile, est = factorization_entropy(n)
        assert est.value == 0.0
        assert len(profile.factors) == 1


def test_factorization_entropy_squarefree_is_ln_omega():
    profile, est = factorization_entropy(2 * 3 * 5 * 7)
    assert profile.big_omega == 4
    assert est.value == pytest.approx(math.log(4), rel=1e-12)


def test_factorization_entropy_mixed_multiplicities():
    # 2250 = 2 * 3^2 * 5^3: H = ln 6 - (2 ln 2 + 3 ln 3)/6.
    profile, est = factorization_entropy(2250)
    assert profile.factors == ((2, 1), (3, 2), (5, 3))
    assert profile.big_omega == 6
    expected = math.log(6) - (2 * math.log(2) + 3 * math.log(3)) / 6
    assert est.value == pytest.approx(expected, rel=1e-12)
    assert est.value == pytest.approx(1.0114042647073518, rel=1e-12)


def test_factorization_matches_trial_division_oracle():
    rng = random.Random(404)
    for _ in range(40):
        n = rng.randrange(2, 20_000)
        profile, est = factorization_entropy(n)
        expected_factors = oracle_factor(n)
        assert list(profile.factors) == expected_factors
        omega = sum(a for _, a in expected_factors)
        expected_h = math.log(omega) - sum(a * math.log(a) for _, a in expected_factors) / omega
        assert est.value == pytest.approx(max(expected_h, 0.0), abs=1e-12)
        # Reconstruction: the profile really factors n.
        prod = 1
        for p, a in profile.factors:
            prod *= p**a
        assert prod == n


def test_factorization_large_semiprime():
    """Cofactors beyond the internal sieve cap are still factored correctly."""
    n = 1000003 * 1000033
    profile, est = factorization_entropy(n)
    assert profile.factors == ((1000003, 1), (1000033, 1))
    assert est.value == pytest.approx(math.log(2), rel=1e-12)


def test_factorization_domain():
    with pytest.raises(DomainError):
        factorization_entropy(1)


# --- constants and sums -------------------------------------------------------

def test_entropy_loss_constant():
    assert entropy_loss_constant() == pytest.approx(0.6099488636120962, rel=1e-12)
    # Between 0 and 1: less than one bit is lost per bit.
    assert 0.0 < entropy_loss_constant() < 1.0


def test_chebyshev_C_values():
    assert chebyshev_C(2) == pytest.approx(math.log(2) / 2, rel=1e-14)
    assert chebyshev_C(10) == pytest.approx(1.312652433140255, rel=1e-12)
    expected = sum(math.log(p) / p for p in oracle_primes(100))
    assert chebyshev_C(100) == pytest.approx(expected, rel=1e-12)
    with pytest.raises(DomainError):
        chebyshev_C(1)


def test_chebyshev_C_tracks_ln_n():
    """C(n) - ln n approaches a constant near -1.33; the ratio tends to 1."""
    assert chebyshev_C(10**6) / math.log(10**6) == pytest.approx(0.9035920419924502, rel=1e-10)
    diffs = [chebyshev_C(10**k) - math.log(10**k) for k in (4, 5, 6)]
    assert all(-1.5 < d < -1.2 for d in diffs)


# --- envelope integral ----------------------------------------------------------

def test_envelope_integral_frozen_values():
    assert envelope_entropy_integral(math.exp(E), 1e-6) == pytest.approx(
        -306.9531106780653, rel=1e-9
    )
    assert envelope_entropy_integral(1e4, 1e-6) == pytest.approx(
        3198.3496961881865, rel=1e-9
    )


def test_envelope_integral_cutoff_dependence_near_endpoint():
    """The divergence at k = e makes small upper limits cutoff-sensitive."""
    at_1e6 = envelope_entropy_integral(1e4, 1e-6)
    at_1e9 = envelope_entropy_integral(1e4, 1e-9)
    assert at_1e9 == pytest.approx(2855.3012522426175, rel=1e-9)
    # Smaller cutoff admits more of the negative spike near e.
    assert at_1e9 < at_1e6
    assert abs(at_1e6 - at_1e9) / abs(at_1e6) > 0.05


def test_envelope_integral_additivity():
    """Integral over [e+d, b] splits as [e+d, m] + [m, b]."""
    whole = envelope_entropy_integral(5000.0, 1e-6)
    from scipy.integrate import quad

    def integrand(k):
        L = math.log(math.log(k))
        return math.log(L) / L

    tail, _ = quad(integrand, 100.0, 5000.0, epsabs=1e-10, epsrel=1e-12, limit=200)
    head = envelope_entropy_integral(100.0, 1e-6)
    assert whole == pytest.approx(head + tail, rel=1e-5)


def test_envelope_integral_domain():
    with pytest.raises(DomainError):
        envelope_entropy_integral(2.0)
    with pytest.raises(DomainError):
        envelope_entropy_integral(E + 1e-7, 1e-6)
    with pytest.raises(DomainError):
        envelope_entropy_integral(100.0, 0.0)
