"""Exact subsequence counting, Legendre inclusion-exclusion, and the density
and upper-bound formulas derived from it.

All formula evaluation is double precision with natural logs; the counting
side stays in exact integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidArgument, RangeError, UnsupportedCombination
from .sequences import Selector, depth, generate
from .sieve import SieveStore

# Beyond this the direct signed-subset expansion is off the table.
DIRECT_EXPANSION_MAX_R = 20

# 2**r above this would overflow doubles; report an infinity marker instead.
_POW2_LIMIT = 1020


def pi_subseq(selector: Selector, x: int, store: SieveStore) -> int:
    """Exact member count of the selected subsequence up to x.

    Twin counting is pair-based: pairs (p, p+2) with both prime and p+2 <= x.
    """
    if x > store.x_max:
        raise RangeError(f"{x} exceeds sieve limit {store.x_max}")
    if selector.kind == "twin":
        return sum(1 for p in store.primes_up_to(max(x - 2, 0)) if store.is_prime(p + 2))
    if selector.kind == "all":
        return store.prime_pi(x)
    return len(generate(selector, None if selector.kind == "order" else "depth-parity", x, store))


def twin_pairs(x: int, store: SieveStore) -> list[tuple[int, int]]:
    """All twin pairs (p, p+2) with p+2 <= x."""
    if x > store.x_max:
        raise RangeError(f"{x} exceeds sieve limit {store.x_max}")
    return [
        (p, p + 2) for p in store.primes_up_to(max(x - 2, 0)) if store.is_prime(p + 2)
    ]


# -- Legendre inclusion-exclusion -------------------------------------------


def _phi_direct(x: int, primes: list[int]) -> int:
    # Signed subset expansion with pruning: once the squarefree product
    # exceeds x every extension floors to zero.
    total = 0
    n = len(primes)

    def walk(start: int, prod: int, sign: int) -> None:
        nonlocal total
        total += sign * (x // prod)
        for j in range(start, n):
            nxt = prod * primes[j]
            if nxt > x:
                break
            walk(j + 1, nxt, -sign)

    walk(0, 1, 1)
    return total


def _phi_recursive(x: int, r: int, primes: list[int]) -> int:
    if x <= 0:
        return 0
    if r == 0:
        return x
    return _phi_recursive(x, r - 1, primes) - _phi_recursive(
        x // primes[r - 1], r - 1, primes
    )


def legendre_A(x: int, r: int, store: SieveStore, strategy: str = "auto") -> int:
    """Count of n in [1, x] coprime to the first r primes (n = 1 included).

    ``strategy`` is one of "auto", "direct", "recursive".  A pinned "direct"
    with r too large is an error rather than a silent fallback.
    """
    if x < 1:
        raise InvalidArgument(f"need x >= 1, got {x}")
    if r < 1:
        raise InvalidArgument(f"need r >= 1, got {r}")
    primes = store.first_primes(r)
    if strategy == "direct":
        if r > DIRECT_EXPANSION_MAX_R:
            raise InvalidArgument(
                f"direct expansion capped at r = {DIRECT_EXPANSION_MAX_R}; "
                f"use the recursive strategy for r = {r}"
            )
        return _phi_direct(x, primes)
    if strategy == "recursive":
        return _phi_recursive(x, r, primes)
    if strategy == "auto":
        if r <= DIRECT_EXPANSION_MAX_R:
            return _phi_direct(x, primes)
        return _phi_recursive(x, r, primes)
    raise InvalidArgument(f"unknown strategy {strategy!r}")


def sieve_product(r: int, store: SieveStore) -> float:
    """prod_{i<=r} (1 - 1/p_i)."""
    out = 1.0
    for p in store.first_primes(r):
        out *= 1.0 - 1.0 / p
    return out


def check_theorem1(x: int, store: SieveStore) -> bool:
    """prod_{p<=x} (1 - 1/p) < 1/ln(x)."""
    if x < 2:
        raise InvalidArgument(f"need x >= 2, got {x}")
    prod = 1.0
    for p in store.primes_up_to(x):
        prod *= 1.0 - 1.0 / p
    return prod < 1.0 / math.log(x)


def theorem1_grid(xs: list[int], store: SieveStore) -> list[bool]:
    """check_theorem1 over an ascending grid with a single cumulative sweep."""
    if any(x < 2 for x in xs):
        raise InvalidArgument("grid points must be >= 2")
    if sorted(xs) != list(xs):
        raise InvalidArgument("grid must be ascending")
    results = []
    prod = 1.0
    primes = store.primes_up_to(xs[-1]) if xs else []
    i = 0
    for x in xs:
        while i < len(primes) and primes[i] <= x:
            prod *= 1.0 - 1.0 / primes[i]
            i += 1
        results.append(prod < 1.0 / math.log(x))
    return results


# -- densities and the j/k split --------------------------------------------


def jk_split(x: float) -> tuple[float, float]:
    """(j, k) with j = 1/(ln x + 1), k = ln x/(ln x + 1); j + k = 1."""
    if x <= 1:
        raise InvalidArgument(f"need x > 1, got {x}")
    lx = math.log(x)
    return 1.0 / (lx + 1.0), lx / (lx + 1.0)


def density_pred(selector: Selector, x: float) -> float:
    """Predicted asymptotic density of the selected subsequence at x."""
    if x <= 1:
        raise InvalidArgument(f"need x > 1, got {x}")
    lx = math.log(x)
    if selector.kind == "p-prime":
        return 1.0 / (lx + 1.0)
    if selector.kind == "p-dprime":
        return 1.0 / (lx * (lx + 1.0))
    raise UnsupportedCombination(
        f"no closed-form density for selector {selector.kind!r}"
    )


def gap_pred(selector: Selector, x: float) -> float:
    """Predicted average gap: the reciprocal of the density."""
    return 1.0 / density_pred(selector, x)


# -- bound evaluators --------------------------------------------------------


@dataclass
class BoundConfig:
    """Parameters for the sieve-based upper bounds.

    r is the number of sieving primes; when derived from x it is
    floor(x**m) with m = 1/(c * ln ln x).  C is the free leading constant.
    """

    r: int | None = None
    c: float = 5.0
    C: float = 1.0

    def __post_init__(self):
        if self.r is not None and self.r < 1:
            raise InvalidArgument(f"need r >= 1, got {self.r}")
        if self.c < 1:
            raise InvalidArgument(f"need c >= 1, got {self.c}")
        if self.C <= 0:
            raise InvalidArgument(f"need C > 0, got {self.C}")

    def resolved_r(self, x: int) -> int:
        if self.r is not None:
            return self.r
        if x <= math.e**math.e:
            raise InvalidArgument(f"derived r needs x > e^e, got {x}")
        m = 1.0 / (self.c * math.log(math.log(x)))
        return max(1, math.floor(x**m))


def _pow2(r: int) -> float:
    return math.inf if r > _POW2_LIMIT else float(2**r)


def subseq_counts_among_first_r(r: int, store: SieveStore) -> tuple[int, int, int]:
    """(r', r'', r_2): members of each subsequence among the first r primes.

    r_2 counts twin pairs with both members <= p_r, which keeps the
    r_2 <= floor(r/2) cap intact (a raw member count would not).
    """
    firsts = store.first_primes(r)
    r_prime = sum(1 for p in firsts if depth(p, store) % 2 == 1)
    r_dprime = r - r_prime
    p_r = firsts[-1]
    r_twin = sum(
        1 for p in store.primes_up_to(max(p_r - 2, 0)) if store.is_prime(p + 2)
    )
    return r_prime, r_dprime, r_twin


def bound_eval(
    selector: Selector,
    x: int,
    cfg: BoundConfig,
    form: str,
    store: SieveStore | None = None,
) -> float:
    """Evaluate the upper bound for the selected count at x.

    "raw" forms use exact per-subsequence prime counts from the store and the
    2**r error term; "final" forms are the closed formulas in x with the
    leading constant cfg.C and need no store.
    """
    if form not in {"raw", "final"}:
        raise InvalidArgument(f"form must be 'raw' or 'final', got {form!r}")

    if form == "final":
        if x <= math.e**math.e:
            raise InvalidArgument(f"final bounds need x > e^e, got {x}")
        lx = math.log(x)
        llx = math.log(lx)
        if selector.kind == "p-dprime":
            return cfg.C * x * llx**2 / (lx**2 + llx * lx)
        if selector.kind == "p-prime":
            return cfg.C * x * llx / (lx + llx)
        if selector.kind == "twin":
            return cfg.C * x * llx**2 / lx**2
        raise UnsupportedCombination(
            f"no final bound for selector {selector.kind!r}"
        )

    if store is None:
        raise InvalidArgument("raw bounds need a sieve store")
    r = cfg.resolved_r(x)
    p_r = store.nth_prime(r)
    lpr = math.log(p_r)
    if selector.kind == "all":
        return r + x / lpr + _pow2(r)
    r_prime, r_dprime, r_twin = subseq_counts_among_first_r(r, store)
    if selector.kind == "p-prime":
        return r_prime + x / (lpr + 1.0) + _pow2(r_prime)
    if selector.kind == "p-dprime":
        return r_dprime + x / (lpr * (lpr + 1.0)) + _pow2(r_dprime)
    if selector.kind == "twin":
        return r_twin + cfg.C * x / lpr**2 + _pow2(r_twin)
    raise UnsupportedCombination(f"no raw bound for selector {selector.kind!r}")


def fit_constant(
    selector: Selector, x_grid: list[int], store: SieveStore
) -> float:
    """Smallest C making the final bound dominate the exact count on the grid."""
    if not x_grid:
        raise InvalidArgument("fit_constant needs a non-empty grid")
    best = 0.0
    unit = BoundConfig(C=1.0)
    for x in x_grid:
        base = bound_eval(selector, x, unit, "final")
        exact = pi_subseq(selector, x, store)
        best = max(best, exact / base)
    return best


# -- side-by-side report ------------------------------------------------------


@dataclass
class CountReport:
    x: int
    pi: int
    pi_prime: int
    pi_dprime: int
    pi_twin_pairs: int
    d_prime_pred: float
    d_dprime_pred: float
    g_prime_pred: float
    g_dprime_pred: float

    CSV_HEADER = "x,pi,pi_prime,pi_dprime,pi_twin_pairs,d_prime_pred,d_dprime_pred,g_prime_pred,g_dprime_pred"

    def csv_row(self) -> str:
        return (
            f"{self.x},{self.pi},{self.pi_prime},{self.pi_dprime},"
            f"{self.pi_twin_pairs},{self.d_prime_pred!r},{self.d_dprime_pred!r},"
            f"{self.g_prime_pred!r},{self.g_dprime_pred!r}"
        )


def count_report(x: int, store: SieveStore) -> CountReport:
    from .sequences import P_DPRIME, P_PRIME, TWIN

    pi = store.prime_pi(x)
    pi_p = pi_subseq(P_PRIME, x, store)
    pi_pp = pi_subseq(P_DPRIME, x, store)
    pi_t = pi_subseq(TWIN, x, store)
    d_p = density_pred(P_PRIME, x)
    d_pp = density_pred(P_DPRIME, x)
    return CountReport(
        x=x,
        pi=pi,
        pi_prime=pi_p,
        pi_dprime=pi_pp,
        pi_twin_pairs=pi_t,
        d_prime_pred=d_p,
        d_dprime_pred=d_pp,
        g_prime_pred=1.0 / d_p,
        g_dprime_pred=1.0 / d_pp,
    )
