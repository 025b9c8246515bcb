"""Shared test helpers: tiny independent oracles built on trial division only."""

from __future__ import annotations


def oracle_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def oracle_primes(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if oracle_is_prime(n)]


def oracle_factor(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, a))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out
