"""Exceptions raised by the rational core and the sum engine."""


class DomainError(ValueError):
    """An argument violates a precondition (coprimality, positivity, primality, ...)."""


class RangeError(DomainError):
    """A shift n lies outside the range where Dedekind-Rademacher reciprocity is stated."""
