"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class NotASubsequenceError(DomainError):
    """A matching set was requested for a word that does not embed."""


class WordCapExceededError(RuntimeError):
    """An enumeration would exceed the configured word cap."""


class PostconditionError(RuntimeError):
    """A constructive procedure produced output failing its own guarantees.

    These procedures exist to certify combinatorial facts, so a failed
    self-check is a hard error rather than a degraded result.
    """
