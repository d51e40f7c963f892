"""The complementary prime subsequences and their generators.

Three routes produce the same pair of sequences and are cross-checked in the
tests:

* depth parity -- classify each prime by how many times "take the prime at
  this index" can be iterated before hitting a non-prime;
* index sieve -- walk the natural line (resp. the prime line), emitting the
  prime indexed by each surviving position and striking the emitted value;
* prime indexing -- map the first sequence through nth_prime to obtain the
  second, and take the complement inside the primes for the first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgument, RangeError, UnsupportedCombination
from .sieve import SieveStore

# -- selectors and methods ------------------------------------------------


@dataclass(frozen=True)
class Selector:
    kind: str  # "all" | "p-prime" | "p-dprime" | "twin" | "order"
    k: int = 1

    def __post_init__(self):
        if self.kind not in {"all", "p-prime", "p-dprime", "twin", "order"}:
            raise InvalidArgument(f"unknown selector kind {self.kind!r}")
        if self.kind == "order" and self.k < 1:
            raise InvalidArgument(f"order k must be >= 1, got {self.k}")


ALL_PRIMES = Selector("all")
P_PRIME = Selector("p-prime")
P_DPRIME = Selector("p-dprime")
TWIN = Selector("twin")


def order(k: int) -> Selector:
    return Selector("order", k)


DEPTH_PARITY = "depth-parity"
INDEX_SIEVE = "index-sieve"
PRIME_INDEXING = "prime-indexing"
METHODS = (DEPTH_PARITY, INDEX_SIEVE, PRIME_INDEXING)


# -- depth -----------------------------------------------------------------


def depth(n: int, store: SieveStore) -> int:
    """Prime-iteration depth of n.

    0 for non-primes; otherwise 1 + depth(prime_index(n)).  Equals the number
    of order-k sequences containing n.  The index chain strictly decreases,
    so n <= x_max keeps every step in range.
    """
    if n < 1:
        raise InvalidArgument(f"depth requires n >= 1, got {n}")
    cache = store._depth_cache
    chain = []
    m = n
    while m not in cache:
        if not store.is_prime(m):
            cache[m] = 0
            break
        chain.append(m)
        m = store.prime_index(m)
    for m in reversed(chain):
        cache[m] = 1 + cache[store.prime_index(m)]
    return cache[n]


def order_k_sequence(k: int, limit: int, store: SieveStore) -> list[int]:
    """Members <= limit of the order-k sequence (k=1: all primes, k=2:
    primes with prime index, ...).  A prime belongs iff its depth is >= k."""
    if k < 1:
        raise InvalidArgument(f"order k must be >= 1, got {k}")
    return [p for p in store.primes_up_to(limit) if depth(p, store) >= k]


# -- generators ------------------------------------------------------------


def _pprime_depth_parity(limit: int, store: SieveStore) -> list[int]:
    return [p for p in store.primes_up_to(limit) if depth(p, store) % 2 == 1]


def _pdprime_depth_parity(limit: int, store: SieveStore) -> list[int]:
    return [p for p in store.primes_up_to(limit) if depth(p, store) % 2 == 0]


def _pprime_index_sieve(limit: int, store: SieveStore) -> list[int]:
    # Walk the natural line: emit the prime indexed by the current surviving
    # position, strike the emitted value from the line, advance to the next
    # survivor.  A nth_prime range miss means the next term exceeds x_max
    # (hence the limit), which terminates the walk.
    removed: set[int] = set()
    out: list[int] = []
    m = 1
    while True:
        try:
            p = store.nth_prime(m)
        except RangeError:
            break
        if p > limit:
            break
        out.append(p)
        removed.add(p)
        m += 1
        while m in removed:
            m += 1
    return out


def _pdprime_index_sieve(limit: int, store: SieveStore) -> list[int]:
    # Same walk, but the line is the primes themselves: surviving primes act
    # as indices into the prime sequence.
    removed: set[int] = set()
    out: list[int] = []
    i = 1
    while True:
        try:
            q = store.nth_prime(i)
        except RangeError:
            break
        i += 1
        if q in removed:
            continue
        try:
            p = store.nth_prime(q)
        except RangeError:
            break
        if p > limit:
            break
        out.append(p)
        removed.add(p)
    return out


def _pdprime_prime_indexing(limit: int, store: SieveStore) -> list[int]:
    # Primes indexed by the first sequence: {p_k : k in P'}.
    index_bound = store.prime_pi(limit)
    if index_bound == 0:
        return []
    ks = _pprime_depth_parity(index_bound, store)
    return [store.nth_prime(k) for k in ks]


def _pprime_prime_indexing(limit: int, store: SieveStore) -> list[int]:
    # Complement route: everything the indexed sequence does not claim.
    taken = set(_pdprime_prime_indexing(limit, store))
    return [p for p in store.primes_up_to(limit) if p not in taken]


def _twin_members(limit: int, store: SieveStore) -> list[int]:
    # Membership convention: p with a prime neighbour at distance 2 (the
    # neighbour may exceed the limit, so the sieve needs limit+2 headroom).
    if limit + 2 > store.x_max:
        raise RangeError(
            f"twin membership at {limit} needs sieve coverage to {limit + 2}"
        )
    return [
        p
        for p in store.primes_up_to(limit)
        if (p > 2 and store.is_prime(p - 2)) or store.is_prime(p + 2)
    ]


def generate(
    selector: Selector,
    method: str | None,
    limit: int,
    store: SieveStore,
) -> list[int]:
    """Members of the selected sequence up to ``limit``, ascending."""
    if limit > store.x_max:
        raise RangeError(f"limit {limit} exceeds sieve limit {store.x_max}")
    if selector.kind in {"all", "twin", "order"}:
        if method is not None:
            raise UnsupportedCombination(
                f"selector {selector.kind!r} does not take a generator method"
            )
        if selector.kind == "all":
            return store.primes_up_to(limit)
        if selector.kind == "twin":
            return _twin_members(limit, store)
        return order_k_sequence(selector.k, limit, store)

    if method is None:
        method = DEPTH_PARITY
    if method not in METHODS:
        raise UnsupportedCombination(f"unknown generator method {method!r}")
    table = {
        ("p-prime", DEPTH_PARITY): _pprime_depth_parity,
        ("p-prime", INDEX_SIEVE): _pprime_index_sieve,
        ("p-prime", PRIME_INDEXING): _pprime_prime_indexing,
        ("p-dprime", DEPTH_PARITY): _pdprime_depth_parity,
        ("p-dprime", INDEX_SIEVE): _pdprime_index_sieve,
        ("p-dprime", PRIME_INDEXING): _pdprime_prime_indexing,
    }
    return table[(selector.kind, method)](limit, store)


def verify_partition(limit: int, store: SieveStore) -> bool:
    """True iff the two subsequences are disjoint and together exhaust the
    primes up to ``limit``."""
    first = generate(P_PRIME, DEPTH_PARITY, limit, store)
    second = generate(P_DPRIME, DEPTH_PARITY, limit, store)
    if set(first) & set(second):
        return False
    return sorted(first + second) == store.primes_up_to(limit)


def bfile_lines(values: list[int], start: int = 1) -> list[str]:
    """OEIS b-file rendering: one ``index value`` pair per line, 1-indexed."""
    return [f"{i} {v}" for i, v in enumerate(values, start)]
