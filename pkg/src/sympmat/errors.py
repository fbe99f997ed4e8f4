"""Exception types shared across the package."""


class SympmatError(Exception):
    """Base class for domain errors raised by this package."""


class NotAMatroidError(SympmatError):
    """A basis family has no bag presentation / fails the unique-maximum test."""


class EmptyBasesError(SympmatError):
    """A basis family is empty where a nonempty one is required."""


class TooLargeError(SympmatError):
    """An exhaustive enumeration was requested beyond the supported size."""


class InvalidMoveError(SympmatError):
    """A bag operation (erase, merge, split) violates its preconditions."""


class EmptyProjectionError(SympmatError):
    """Dropping the diagonal bases left no admissible base at all."""


class NoLiftingError(SympmatError):
    """No symmetric basis family projects onto the given admissible family."""


class NotRepresentableError(SympmatError):
    """Every lifting has exactly one diagonal base, so no witness exists."""


class RankDeficientError(SympmatError):
    """A witness matrix does not have full row rank (all 2x2 minors vanish)."""
