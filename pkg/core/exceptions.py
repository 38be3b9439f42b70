class BrauerBlocksError(Exception):
    """Base class for every error raised by the block machinery."""


class UsageError(BrauerBlocksError, ValueError):
    """The caller asked for something that makes no sense (i = j, n = 1, ...)."""


class ParseError(UsageError):
    """Malformed partition or diagram text."""


class DomainError(BrauerBlocksError, ValueError):
    """A mathematical precondition failed."""


class IllegalMoveError(DomainError):
    """A bead move would land on a negative or occupied position."""


class ReductionPreconditionError(DomainError):
    """The abacus has fewer than three beads on runner 0."""

    def __init__(self, message: str, required_b: int):
        super().__init__(message)
        self.required_b = required_b


class InvariantViolation(BrauerBlocksError):
    """A self-check failed; the result would not have been trustworthy."""


class SearchLimitExceeded(BrauerBlocksError):
    """A brute-force search reached its state cap before closing."""
