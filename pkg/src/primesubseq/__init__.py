"""Complementary prime subsequences: generation, counting, bounds, and
reciprocal sums."""

from .counting import (
    BoundConfig,
    CountReport,
    bound_eval,
    check_theorem1,
    count_report,
    density_pred,
    fit_constant,
    gap_pred,
    jk_split,
    legendre_A,
    pi_subseq,
    sieve_product,
    theorem1_grid,
    twin_pairs,
)
from .errors import (
    InvalidArgument,
    NotPrimeError,
    PrimeSubseqError,
    RangeError,
    UnsupportedCombination,
)
from .reciprocal import (
    DISTINCT_MEMBERS,
    LESSER_ONLY,
    PAIR_BOTH_MEMBERS,
    TWIN_CONVENTIONS,
    CompensatedSum,
    ReciprocalRow,
    paper_grid,
    reciprocal_sum,
    table3,
)
from .sequences import (
    ALL_PRIMES,
    DEPTH_PARITY,
    INDEX_SIEVE,
    METHODS,
    P_DPRIME,
    P_PRIME,
    PRIME_INDEXING,
    TWIN,
    Selector,
    bfile_lines,
    depth,
    generate,
    order,
    order_k_sequence,
    verify_partition,
)
from .sieve import SieveStore, build_sieve

__version__ = "0.1.0"
