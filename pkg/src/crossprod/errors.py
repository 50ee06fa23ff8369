"""Exception types shared across the package."""

from __future__ import annotations


class CrossprodError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(CrossprodError):
    """Two sides of a composition, application or comparison disagree in total dimension."""


class NotAGroup(CrossprodError):
    """A multiplication table fails one of the group axioms."""


class NotGraded(CrossprodError):
    """A parity assignment is not an algebra grading."""


class NotACocycle(CrossprodError):
    """A scalar table fails normalization or the 2-cocycle identity."""


class AxiomViolation(CrossprodError):
    """A verified precondition failed; carries the offending CheckReport."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ParseError(CrossprodError):
    """An expression failed to parse.

    `offset` is the byte offset of the failure in the source string and
    `expected` the set of token kinds that would have been accepted there.
    """

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        super().__init__(message)
        self.offset = offset
        self.expected = tuple(expected)


class UnboundName(CrossprodError):
    """An expression references a name missing from the environment."""

    def __init__(self, message: str, name: str, span: tuple[int, int] | None = None):
        super().__init__(message)
        self.name = name
        self.span = span


class EvalDimensionMismatch(DimensionMismatch):
    """Dimension mismatch during expression evaluation; carries the source span."""

    def __init__(self, message: str, span: tuple[int, int] | None = None):
        super().__init__(message)
        self.span = span


class FormatError(CrossprodError):
    """A bundle document is malformed.  `location` is a dotted path into the file."""

    def __init__(self, message: str, location: str = "", path: str = ""):
        super().__init__(message)
        self.location = location
        self.path = path


class RefError(CrossprodError):
    """A cross-reference inside a bundle does not resolve."""

    def __init__(self, message: str, name: str = ""):
        super().__init__(message)
        self.name = name
