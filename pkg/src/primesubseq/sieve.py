"""Segmented sieve of Eratosthenes and the prime oracle built on top of it.

The sieve is built once, windows of ``segment_size`` at a time, and the
resulting store is immutable: a flag table for primality plus a sorted prime
list answering nth-prime, prime-index and prime-counting queries by bisection.
Results never depend on the segment size.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right

from .errors import InvalidArgument, NotPrimeError, RangeError

# Window that keeps the working set within L2-ish cache; correctness is
# independent of this value (see tests).
DEFAULT_SEGMENT_SIZE = 1 << 16


def _small_sieve(n: int) -> list[int]:
    """Plain sieve; used only for base primes up to sqrt(x_max)."""
    if n < 2:
        return []
    flags = bytearray(b"\x01") * (n + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * ((n - start) // p + 1)
    return [i for i in range(n + 1) if flags[i]]


class SieveStore:
    """Queryable prime oracle over [2, x_max].

    Safe for concurrent reads after construction; nothing is mutated by the
    query methods except an internal memo table guarded by the GIL.
    """

    def __init__(self, x_max: int, segment_size: int = DEFAULT_SEGMENT_SIZE):
        if x_max < 2:
            raise InvalidArgument(f"x_max must be >= 2, got {x_max}")
        if segment_size < 1:
            raise InvalidArgument(f"segment_size must be >= 1, got {segment_size}")
        self.x_max = x_max
        self.segment_size = segment_size
        self._flags = self._sieve_flags(x_max, segment_size)
        self._primes = [i for i in range(x_max + 1) if self._flags[i]]
        # Cumulative prime counts at segment boundaries (monotone by build).
        self._segment_counts = [
            bisect_right(self._primes, min(hi, x_max))
            for hi in range(segment_size, x_max + segment_size + 1, segment_size)
        ]
        self._depth_cache: dict[int, int] = {1: 0}

    @staticmethod
    def _sieve_flags(x_max: int, segment_size: int) -> bytearray:
        flags = bytearray(b"\x01") * (x_max + 1)
        flags[0:2] = b"\x00\x00"
        base = _small_sieve(math.isqrt(x_max))
        for lo in range(2, x_max + 1, segment_size):
            hi = min(lo + segment_size - 1, x_max)
            for p in base:
                start = max(p * p, ((lo + p - 1) // p) * p)
                if start > hi:
                    continue
                flags[start : hi + 1 : p] = b"\x00" * ((hi - start) // p + 1)
        return flags

    # -- queries ---------------------------------------------------------

    @property
    def prime_count(self) -> int:
        return len(self._primes)

    def is_prime(self, n: int) -> bool:
        if n < 0 or n > self.x_max:
            raise RangeError(f"{n} outside sieve range [0, {self.x_max}]")
        return bool(self._flags[n])

    def prime_pi(self, x: int) -> int:
        """Exact count of primes <= x."""
        if x > self.x_max:
            raise RangeError(f"{x} exceeds sieve limit {self.x_max}")
        if x < 2:
            return 0
        return bisect_right(self._primes, x)

    def nth_prime(self, n: int) -> int:
        """The n-th prime, 1-indexed (nth_prime(1) = 2)."""
        if n < 1:
            raise InvalidArgument(f"prime index must be >= 1, got {n}")
        if n > len(self._primes):
            raise RangeError(f"prime #{n} exceeds sieve limit {self.x_max}")
        return self._primes[n - 1]

    def prime_index(self, p: int) -> int:
        """Inverse of nth_prime: the n with p_n = p."""
        if p > self.x_max:
            raise RangeError(f"{p} exceeds sieve limit {self.x_max}")
        if p < 2 or not self._flags[p]:
            raise NotPrimeError(f"{p} is not prime")
        return bisect_left(self._primes, p) + 1

    def primes_up_to(self, limit: int) -> list[int]:
        if limit > self.x_max:
            raise RangeError(f"{limit} exceeds sieve limit {self.x_max}")
        return self._primes[: bisect_right(self._primes, limit)]

    def first_primes(self, r: int) -> list[int]:
        if r < 1:
            raise InvalidArgument(f"need r >= 1, got {r}")
        if r > len(self._primes):
            raise RangeError(f"prime #{r} exceeds sieve limit {self.x_max}")
        return self._primes[:r]


def build_sieve(x_max: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> SieveStore:
    return SieveStore(x_max, segment_size)
