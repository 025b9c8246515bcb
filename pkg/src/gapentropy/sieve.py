"""Prime generation and gap statistics via a segmented sieve of Eratosthenes.

The sieve stores odd candidates only and works segment by segment, so memory
stays bounded by the segment size while the output is exactly the primes up
to the limit, independent of how the range was chunked.  All public results
are plain immutable values (tuples, ints, read-only arrays) and every
operation is a pure function of its inputs.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

DEFAULT_SEGMENT_SIZE = 1 << 18


@dataclass(frozen=True)
class PrimeRange:
    """Inclusive sieving range [2, limit] with an internal chunk size.

    segment_size only controls how much work is done per pass; it never
    changes any result.
    """

    limit: int
    segment_size: int = DEFAULT_SEGMENT_SIZE

    def __post_init__(self) -> None:
        if self.limit < 2:
            raise DomainError(f"limit must be >= 2, got {self.limit}")
        if self.segment_size < 1:
            raise DomainError(f"segment_size must be >= 1, got {self.segment_size}")


@dataclass(frozen=True)
class GapHistogram:
    """Counts of differences between consecutive primes up to `limit`.

    The single odd gap 1 (between 2 and 3) is kept; every other key is even.
    Consumers that want odd-prime gaps only can drop key 1 themselves.
    """

    limit: int
    counts: dict[int, int] = field(repr=False)
    total_gaps: int = 0

    def __post_init__(self) -> None:
        if sum(self.counts.values()) != self.total_gaps:
            raise DomainError("histogram counts do not sum to total_gaps")


def _coerce_range(prange: PrimeRange | int) -> PrimeRange:
    if isinstance(prange, PrimeRange):
        return prange
    return PrimeRange(limit=int(prange))


def _small_primes(limit: int) -> np.ndarray:
    """Plain (non-segmented) sieve used for base primes up to sqrt(limit)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.nonzero(is_prime)[0].astype(np.int64)


def primes_up_to(prange: PrimeRange | int) -> np.ndarray:
    """All primes p <= limit, ascending, as a read-only int64 array."""
    prange = _coerce_range(prange)
    limit, seg = prange.limit, prange.segment_size

    base = _small_primes(math.isqrt(limit))
    odd_base = base[base > 2]

    chunks: list[np.ndarray] = [np.array([2], dtype=np.int64)] if limit >= 2 else []
    # Odd candidates are 3, 5, ...; each pass handles `seg` of them, and both
    # segment endpoints are kept odd so index<->value maps stay aligned.
    top = limit if limit % 2 == 1 else limit - 1
    lo = 3
    while lo <= top:
        hi = min(lo + 2 * (seg - 1), top)
        n_cands = (hi - lo) // 2 + 1
        mask = np.ones(n_cands, dtype=bool)
        for p in odd_base:
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start > hi:
                continue
            mask[(start - lo) // 2 :: p] = False
        chunk = lo + 2 * np.nonzero(mask)[0].astype(np.int64)
        chunks.append(chunk)
        lo = hi + 2

    primes = np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)
    primes.setflags(write=False)
    return primes


def prime_count(x: float) -> int:
    """pi(x): the number of primes <= floor(x)."""
    if x < 2:
        raise DomainError(f"prime_count requires x >= 2, got {x}")
    return int(primes_up_to(PrimeRange(limit=math.floor(x))).size)


def nth_prime(n: int) -> int:
    """The n-th prime, with P_1 = 2."""
    if n < 1:
        raise DomainError(f"nth_prime requires n >= 1, got {n}")
    if n < 6:
        return (2, 3, 5, 7, 11)[n - 1]
    # Standard upper bound for the n-th prime, valid for n >= 6.
    bound = math.ceil(n * (math.log(n) + math.log(math.log(n)))) + 10
    while True:
        primes = primes_up_to(PrimeRange(limit=bound))
        if primes.size >= n:
            return int(primes[n - 1])
        bound *= 2


def gap_histogram(prange: PrimeRange | int) -> GapHistogram:
    """Histogram of P_{k+1} - P_k over consecutive primes up to the limit."""
    prange = _coerce_range(prange)
    if prange.limit < 3:
        raise DomainError("gap_histogram requires limit >= 3 (no gaps exist below)")
    primes = primes_up_to(prange)
    diffs = np.diff(primes)
    values, counts = np.unique(diffs, return_counts=True)
    return GapHistogram(
        limit=prange.limit,
        counts={int(v): int(c) for v, c in zip(values, counts)},
        total_gaps=int(diffs.size),
    )


def max_gap(prange: PrimeRange | int) -> tuple[int, int]:
    """Largest gap up to the limit and the prime that opens it.

    Ties are broken toward the smallest lower prime (first occurrence).
    """
    prange = _coerce_range(prange)
    if prange.limit < 3:
        raise DomainError("max_gap requires limit >= 3 (no gaps exist below)")
    primes = primes_up_to(prange)
    diffs = np.diff(primes)
    i = int(np.argmax(diffs))  # argmax returns the first maximal index
    return int(diffs[i]), int(primes[i])


def _is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def next_prime_above(x: float) -> int:
    """Smallest prime strictly greater than x."""
    if x < 0:
        raise DomainError(f"next_prime_above requires x >= 0, got {x}")
    n = math.floor(x) + 1
    if n <= 2:
        return 2
    while not _is_prime_trial(n):
        n += 1
    return n


# --- histogram cache file ----------------------------------------------------
#
# Format: one comment line `# limit=<N>`, a `gap,count` header, then rows in
# ascending gap order.  load_histogram reads back exactly what save wrote.

def save_histogram(hist: GapHistogram, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"# limit={hist.limit}\n")
        fh.write("gap,count\n")
        for gap in sorted(hist.counts):
            fh.write(f"{gap},{hist.counts[gap]}\n")


def load_histogram(path: str | os.PathLike) -> GapHistogram:
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip()
        if not header.startswith("# limit="):
            raise DomainError(f"not a histogram cache file: {path}")
        limit = int(header.split("=", 1)[1])
        if fh.readline().strip() != "gap,count":
            raise DomainError(f"missing gap,count header in {path}")
        counts: dict[int, int] = {}
        for line in fh:
            line = line.strip()
            if not line:
                continue
            g, c = line.split(",")
            counts[int(g)] = int(c)
    return GapHistogram(limit=limit, counts=counts, total_gaps=sum(counts.values()))


def cache_path(limit: int, cache_dir: str | os.PathLike) -> str:
    return os.path.join(cache_dir, f"gap_histogram_{limit}.csv")
