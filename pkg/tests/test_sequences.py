import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primesubseq import (
    ALL_PRIMES,
    DEPTH_PARITY,
    INDEX_SIEVE,
    METHODS,
    P_DPRIME,
    P_PRIME,
    PRIME_INDEXING,
    TWIN,
    InvalidArgument,
    Selector,
    UnsupportedCombination,
    bfile_lines,
    build_sieve,
    depth,
    generate,
    order,
    order_k_sequence,
    verify_partition,
)

PPRIME_LISTING = [2, 5, 7, 13, 19, 23, 29, 31, 37, 43, 47, 53, 59, 61, 71]
PDPRIME_LISTING = [3, 11, 17, 41, 67, 83, 109, 127, 157, 191, 211, 241]


# -- depth -------------------------------------------------------------------


def test_depth_examples(store_small):
    assert depth(1, store_small) == 0
    assert depth(11, store_small) == 4
    assert depth(31, store_small) == 5


def test_depth_rejects_zero(store_small):
    with pytest.raises(InvalidArgument):
        depth(0, store_small)


def test_depth_recursion_identity(store_small):
    s = store_small
    for n in range(1, 2000):
        d = depth(n, s)
        if not s.is_prime(n):
            assert d == 0
        else:
            assert d == 1 + depth(s.prime_index(n), s)


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=10**4))
def test_depth_counts_order_memberships(store_small, n):
    d = depth(n, store_small)
    if store_small.is_prime(n):
        # depth = number of order-k sequences containing n
        memberships = sum(
            1 for k in range(1, d + 2) if n in order_k_sequence(k, n, store_small)
        )
        assert memberships == d


# -- order-k sequences --------------------------------------------------------


def test_order_sequences_match_listings(store_small):
    assert order_k_sequence(1, 20, store_small) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert order_k_sequence(2, 130, store_small) == [3, 5, 11, 17, 31, 41, 59, 67, 83, 109, 127]
    assert order_k_sequence(3, 60, store_small) == [5, 11, 31, 59]
    assert order_k_sequence(4, 710, store_small) == [11, 31, 127, 277, 709]
    assert order_k_sequence(5, 31, store_small) == [31]


def test_order_zero_rejected(store_small):
    with pytest.raises(InvalidArgument):
        order_k_sequence(0, 100, store_small)


def test_order_nesting(store_small):
    for k in range(1, 6):
        hi = set(order_k_sequence(k + 1, 10**4, store_small))
        lo = set(order_k_sequence(k, 10**4, store_small))
        assert hi <= lo


def test_order_selector_matches_function(store_small):
    assert generate(order(3), None, 60, store_small) == [5, 11, 31, 59]
    assert generate(order(1), None, 50, store_small) == generate(
        ALL_PRIMES, None, 50, store_small
    )


# -- generators ---------------------------------------------------------------


def test_pprime_listing_all_methods(store_small):
    for method in METHODS:
        assert generate(P_PRIME, method, 71, store_small) == PPRIME_LISTING, method


def test_pdprime_listing_all_methods(store_small):
    for method in METHODS:
        assert generate(P_DPRIME, method, 241, store_small) == PDPRIME_LISTING, method


def test_default_method_is_depth_parity(store_small):
    assert generate(P_PRIME, None, 71, store_small) == PPRIME_LISTING


def test_method_equivalence_at_10k(store_small):
    for sel in (P_PRIME, P_DPRIME):
        outs = [generate(sel, m, 10**4, store_small) for m in METHODS]
        assert outs[0] == outs[1] == outs[2]


def test_indexing_identity(store_small):
    # n-th member of the indexed sequence = nth_prime(n-th survivor)
    first = generate(P_PRIME, DEPTH_PARITY, 1000, store_small)
    second = generate(P_DPRIME, PRIME_INDEXING, store_small.x_max, store_small)
    for k, p in zip(first, second):
        assert store_small.nth_prime(k) == p


def test_twin_members(store_small):
    twins = generate(TWIN, None, 100, store_small)
    assert twins == [3, 5, 7, 11, 13, 17, 19, 29, 31, 41, 43, 59, 61, 71, 73]


def test_unsupported_combinations(store_small):
    with pytest.raises(UnsupportedCombination):
        generate(TWIN, INDEX_SIEVE, 100, store_small)
    with pytest.raises(UnsupportedCombination):
        generate(ALL_PRIMES, DEPTH_PARITY, 100, store_small)
    with pytest.raises(UnsupportedCombination):
        generate(P_PRIME, "bogus", 100, store_small)


def test_selector_validation():
    with pytest.raises(InvalidArgument):
        Selector("nope")
    with pytest.raises(InvalidArgument):
        order(0)


# -- partition ----------------------------------------------------------------


def test_partition_examples(store_small):
    assert verify_partition(100, store_small)
    assert verify_partition(2, store_small)
    assert generate(P_PRIME, None, 2, store_small) == [2]
    assert generate(P_DPRIME, None, 2, store_small) == []


def test_partition_alternating_parity(store_small):
    # membership is decided by depth parity, prime by prime
    first = set(generate(P_PRIME, DEPTH_PARITY, 10**4, store_small))
    for p in store_small.primes_up_to(10**4):
        assert (p in first) == (depth(p, store_small) % 2 == 1)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=2, max_value=10**4))
def test_partition_at_random_limits(store_small, limit):
    assert verify_partition(limit, store_small)


# -- b-file -------------------------------------------------------------------


def test_bfile_format():
    assert bfile_lines([2, 5, 7]) == ["1 2", "2 5", "3 7"]
    assert bfile_lines([3], start=5) == ["5 3"]
