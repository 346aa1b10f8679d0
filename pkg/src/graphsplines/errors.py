"""Exception types shared across the package."""

from __future__ import annotations


class SplineAlgebraError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(SplineAlgebraError):
    """An element does not belong to the ring an operation expected."""


class ParseError(SplineAlgebraError):
    """A text expression could not be parsed.

    ``position`` is the 0-based character offset of the offending input;
    the message reports it as a 1-based column.
    """

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (column {position + 1})")


class GraphError(SplineAlgebraError):
    """A graph document failed validation.

    ``code`` is a stable machine-readable tag, e.g. ``ZERO_LABEL`` or
    ``DISCONNECTED``.
    """

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"{code}: {message}")
