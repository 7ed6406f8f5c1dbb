"""
Exceptions raised by the series toolkit.

Every error is a ``ValueError`` so callers that only care about bad input
can catch the builtin type; the CLI maps them to exit codes.
"""


class SeriesError(ValueError):
    """Base class for all toolkit errors."""


class ZeroConstantTerm(SeriesError):
    """Raised when inverting a series or polynomial whose constant term is 0."""


class NonzeroConstantTerm(SeriesError):
    """Raised by ``geometric`` when the argument has a constant term."""


class BadConstantTerm(SeriesError):
    """Raised when an enrichment series does not have constant term 1."""


class NotInvertible(SeriesError):
    """Raised when a plethystic inverse is requested but <R, X0> = 0."""


class NoConvergence(SeriesError):
    """Raised when a filtration fixed point does not stabilize within its cap."""


class InvalidPair(SeriesError):
    """Raised when an involution receives a pair outside its domain."""


class UnknownName(SeriesError):
    """Raised for an unregistered named series."""


class UnknownIdentity(SeriesError):
    """Raised for an unregistered identity checker."""


class UnknownTarget(SeriesError):
    """Raised for an unknown q-series target of the CLI."""
