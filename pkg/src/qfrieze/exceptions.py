"""Exceptions for qfrieze."""


class QFriezeError(Exception):
    """Base exception for qfrieze errors."""


class NotDivisible(QFriezeError):
    """Exact division has no quotient in the ring at hand."""

    def __init__(self, message: str, operation: str | None = None) -> None:
        """Initialize division error."""
        super().__init__(message)
        self.operation = operation


class RankMismatch(QFriezeError):
    """Operands live in tori of different rank."""


class InvalidRank(QFriezeError):
    """Rank is too small for a type A quiver."""


class OddRank(InvalidRank):
    """Rank is odd where an invertible exchange matrix is needed."""

    def __init__(self, rank: int) -> None:
        """Initialize odd rank error."""
        super().__init__(f"n must be even, got {rank}")
        self.rank = rank


class DirectionOutOfRange(QFriezeError):
    """Mutation direction outside 1..n."""

    def __init__(self, direction: int, rank: int) -> None:
        """Initialize direction error."""
        super().__init__(f"direction {direction} out of range 1..{rank}")
        self.direction = direction
        self.rank = rank


class NotQuasiCommuting(QFriezeError):
    """Two factors do not quasi-commute with the expected q-exponent."""


class IndexOutOfRange(QFriezeError):
    """Index outside the legal range of a table or a frieze window."""


class InvalidWindow(QFriezeError):
    """Frieze window is malformed or too narrow."""


class InvariantViolation(QFriezeError):
    """A postcondition on computed output does not hold."""
