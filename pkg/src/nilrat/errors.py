"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ``InvalidInputError`` -> 2,
``ValidationError`` -> 3.
"""


class NilratError(Exception):
    """Base class for all errors raised by :mod:`nilrat`."""


class InvalidInputError(NilratError, ValueError):
    """Mathematically invalid input (bad partition, size mismatch, ...)."""


class UnsupportedFamilyError(InvalidInputError):
    """Operation not defined for the requested Lie type."""


class RankBoundError(NilratError):
    """Requested rank exceeds the configured resource bound."""


class ValidationError(NilratError):
    """An internal consistency gate failed; indicates a bug, not bad input."""
