"""Exception types shared across the package."""


class PrimeSubseqError(ValueError):
    """Base class for all errors raised by this package."""


class RangeError(PrimeSubseqError):
    """An argument exceeds the range covered by the backing sieve."""


class NotPrimeError(PrimeSubseqError):
    """A prime was required but a composite (or 0/1) was supplied."""


class InvalidArgument(PrimeSubseqError):
    """An argument violates a precondition unrelated to sieve range."""


class UnsupportedCombination(PrimeSubseqError):
    """The requested selector/method pairing is not defined."""
