"""Partial reciprocal sums for the indexed subsequence and the twin primes.

Accumulation is compensated (Neumaier's variant of Kahan summation) so the
six-figure table reproduction cannot drift at 10^7 terms.  The twin column
carries an explicit convention tag because the three natural reading of
"sum of twin reciprocals" differ:

* pair-both-members: 1/p + 1/(p+2) over pairs, members shared by two pairs
  counted twice (the Brun convention);
* distinct-members: each prime with a prime neighbour at distance 2, once;
* lesser-only: 1/p over the lesser member of each pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgument, RangeError
from .sequences import P_DPRIME, Selector, generate
from .sieve import SieveStore

PAIR_BOTH_MEMBERS = "pair-both-members"
DISTINCT_MEMBERS = "distinct-members"
LESSER_ONLY = "lesser-only"
TWIN_CONVENTIONS = (PAIR_BOTH_MEMBERS, DISTINCT_MEMBERS, LESSER_ONLY)


class CompensatedSum:
    """Running Neumaier-compensated sum."""

    __slots__ = ("_s", "_c")

    def __init__(self) -> None:
        self._s = 0.0
        self._c = 0.0

    def add(self, v: float) -> None:
        t = self._s + v
        if abs(self._s) >= abs(v):
            self._c += (self._s - t) + v
        else:
            self._c += (v - t) + self._s
        self._s = t

    @property
    def value(self) -> float:
        return self._s + self._c


def _twin_reciprocal_terms(
    x: int, convention: str, store: SieveStore
) -> list[float]:
    if convention == PAIR_BOTH_MEMBERS:
        return [
            1.0 / p + 1.0 / (p + 2)
            for p in store.primes_up_to(max(x - 2, 0))
            if store.is_prime(p + 2)
        ]
    if convention == DISTINCT_MEMBERS:
        return [1.0 / p for p in generate(Selector("twin"), None, x, store)]
    if convention == LESSER_ONLY:
        if x + 2 > store.x_max:
            raise RangeError(
                f"lesser-only twins at {x} need sieve coverage to {x + 2}"
            )
        return [
            1.0 / p for p in store.primes_up_to(x) if store.is_prime(p + 2)
        ]
    raise InvalidArgument(f"unknown twin convention {convention!r}")


def reciprocal_sum(
    selector: Selector,
    x: int,
    store: SieveStore,
    convention: str = PAIR_BOTH_MEMBERS,
) -> float:
    """Compensated sum of reciprocals of members <= x."""
    if x > store.x_max:
        raise RangeError(f"{x} exceeds sieve limit {store.x_max}")
    acc = CompensatedSum()
    if selector.kind == "twin":
        terms = _twin_reciprocal_terms(x, convention, store)
    else:
        method = "depth-parity" if selector.kind in ("p-prime", "p-dprime") else None
        terms = [1.0 / p for p in generate(selector, method, x, store)]
    for t in terms:
        acc.add(t)
    return acc.value


@dataclass
class ReciprocalRow:
    x: int
    sum_dprime: float
    sum_twin: float
    twin_convention: str

    CSV_HEADER = "x,sum_p_dprime,sum_twin,twin_convention"

    def csv_row(self) -> str:
        return f"{self.x},{self.sum_dprime!r},{self.sum_twin!r},{self.twin_convention}"


def table3(
    grid: list[int],
    store: SieveStore,
    convention: str = PAIR_BOTH_MEMBERS,
) -> list[ReciprocalRow]:
    """Reciprocal-sum rows over an ascending grid of limits.

    Each row extends the previous sums incrementally; nothing is recomputed
    from scratch.
    """
    if not grid:
        raise InvalidArgument("table3 needs a non-empty grid")
    if sorted(grid) != list(grid):
        raise InvalidArgument("grid must be ascending")
    if convention not in TWIN_CONVENTIONS:
        raise InvalidArgument(f"unknown twin convention {convention!r}")
    x_top = grid[-1]
    if x_top > store.x_max:
        raise RangeError(f"{x_top} exceeds sieve limit {store.x_max}")

    dprime_members = generate(P_DPRIME, "depth-parity", x_top, store)
    # (threshold, term) pairs: a term joins the sum once x >= threshold.
    if convention == PAIR_BOTH_MEMBERS:
        twin_terms = [
            (p + 2, 1.0 / p + 1.0 / (p + 2))
            for p in store.primes_up_to(max(x_top - 2, 0))
            if store.is_prime(p + 2)
        ]
    elif convention == DISTINCT_MEMBERS:
        twin_terms = [
            (p, 1.0 / p) for p in generate(Selector("twin"), None, x_top, store)
        ]
    else:
        twin_terms = _lesser_terms(x_top, store)

    acc_d = CompensatedSum()
    acc_t = CompensatedSum()
    rows = []
    i = j = 0
    for x in grid:
        while i < len(dprime_members) and dprime_members[i] <= x:
            acc_d.add(1.0 / dprime_members[i])
            i += 1
        while j < len(twin_terms) and twin_terms[j][0] <= x:
            acc_t.add(twin_terms[j][1])
            j += 1
        rows.append(ReciprocalRow(x, acc_d.value, acc_t.value, convention))
    return rows


def _lesser_terms(x_top: int, store: SieveStore) -> list[tuple[int, float]]:
    if x_top + 2 > store.x_max:
        raise RangeError(
            f"lesser-only twins at {x_top} need sieve coverage to {x_top + 2}"
        )
    return [
        (p, 1.0 / p) for p in store.primes_up_to(x_top) if store.is_prime(p + 2)
    ]


def paper_grid() -> list[int]:
    """The published table's limits: decades to 1e6, then 2e6..1e7."""
    return [10**k for k in range(2, 7)] + [k * 10**6 for k in range(2, 11)]
