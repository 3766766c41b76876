"""Exception hierarchy for precondition and hypothesis violations."""

from __future__ import annotations


class DomainError(ValueError):
    """An input violates an operation's precondition."""


class ZeroTerm(DomainError):
    """A term is zero where nonzero values are required."""


class RepeatedTerm(DomainError):
    """Window terms must be pairwise distinct."""


class BadRange(DomainError):
    """An index range is empty, reversed, or out of bounds."""


class ZeroSum(DomainError):
    """The reciprocal sum vanishes, so no finite quotient exists."""


class HypothesisViolated(DomainError):
    """The inputs do not satisfy the hypotheses of the requested claim."""


class KTooLarge(DomainError):
    """Table order exceeds the configured cap."""
