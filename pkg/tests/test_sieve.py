import math
import random

import pytest

from primesubseq import (
    InvalidArgument,
    NotPrimeError,
    RangeError,
    build_sieve,
)


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def test_build_rejects_tiny_limit():
    with pytest.raises(InvalidArgument):
        build_sieve(1)


def test_basic_examples():
    s = build_sieve(100)
    assert s.is_prime(7)
    assert s.prime_pi(100) == 25
    assert s.nth_prime(11) == 31


def test_prime_index_examples(store_small):
    assert store_small.prime_index(2) == 1
    assert store_small.prime_index(5) == 3
    assert store_small.prime_index(31) == 11


def test_prime_index_errors(store_small):
    with pytest.raises(NotPrimeError):
        store_small.prime_index(9)
    with pytest.raises(NotPrimeError):
        store_small.prime_index(1)
    with pytest.raises(RangeError):
        store_small.prime_index(10**6)


def test_prime_pi_small_values(store_small):
    assert store_small.prime_pi(1) == 0
    assert store_small.prime_pi(2) == 1
    assert store_small.prime_pi(100) == 25


def test_out_of_range_queries(store_small):
    with pytest.raises(RangeError):
        store_small.prime_pi(10**5)
    with pytest.raises(RangeError):
        store_small.nth_prime(10**6)
    with pytest.raises(InvalidArgument):
        store_small.nth_prime(0)


def test_trial_division_agreement(store_small):
    for n in range(10**4 + 1):
        assert store_small.is_prime(n) == trial_division_is_prime(n), n


def test_nth_prime_roundtrip(store_small):
    for p in store_small.primes_up_to(10**4):
        assert store_small.nth_prime(store_small.prime_index(p)) == p


def test_segment_size_independence():
    rng = random.Random(7)
    points = [rng.randrange(2, 10**5) for _ in range(10**3)]
    stores = [build_sieve(10**5, segment_size=1 << b) for b in (10, 16, 20)]
    for x in points:
        counts = {s.prime_pi(x) for s in stores}
        assert len(counts) == 1, x
    assert stores[0]._flags == stores[1]._flags == stores[2]._flags


def test_prime_pi_monotone_steps(store_small):
    prev = 0
    for x in range(2, 5000):
        cur = store_small.prime_pi(x)
        assert cur - prev == (1 if store_small.is_prime(x) else 0)
        prev = cur


def test_segment_counts_monotone(store_m):
    counts = store_m._segment_counts
    assert all(a <= b for a, b in zip(counts, counts[1:]))
