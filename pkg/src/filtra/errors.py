"""Exception hierarchy shared across the package."""


class FiltraError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(FiltraError):
    """Operands live in different rings (or carry different term orders)."""


class NotHomogeneousError(FiltraError):
    """A graded-only operation received non-homogeneous input."""


class InfiniteLengthError(FiltraError):
    """A length computation met a module that is not Artinian."""


class ContainmentError(FiltraError):
    """A required ideal containment does not hold."""


class ResourceLimitError(FiltraError):
    """A configurable ceiling (pair count, degree, iteration bound) was hit."""


class StabilizationError(ResourceLimitError):
    """An iterative construction did not stabilize within its bound."""


class NotSuperficialError(FiltraError):
    """Certification of a superficial element was refused."""


class InternalConsistencyError(FiltraError):
    """Two routes that must agree disagreed; this always indicates a bug."""


class ParseError(FiltraError):
    """Bad input text; carries the position of the offending token."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})" if line else message)
        self.line = line
        self.column = column
