"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Malformed input: labels out of range, non-partitions, bad documents."""


class CapacityError(RuntimeError):
    """An enumeration bound was exceeded; retry with a larger bound or per-query mode."""


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


class InternalCheckError(AssertionError):
    """Two independent criteria for the same question disagreed.

    Every classification predicate is decided by one designated criterion and
    re-derived through at least one equivalent reformulation; a disagreement
    is never resolved silently, it is a bug in this package.
    """
