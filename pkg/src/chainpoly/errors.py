"""Exception types shared across the package.

Every domain violation raises a subclass of ``DomainError`` (a ``ValueError``)
so callers can distinguish bad input from blown resource budgets, which raise
``ResourceLimitError`` instead.
"""


class DomainError(ValueError):
    """Input is outside the mathematical domain of the operation."""


class InvalidDegreeError(DomainError):
    """A degree bound required by the operation is violated."""


class NotRealRootedError(DomainError):
    """An argument that must be real-rooted is not."""


class GradedStructureError(DomainError):
    """A poset lacks the graded/bounded structure the operation needs."""


class PosetFileError(DomainError):
    """A poset description file is malformed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class ResourceLimitError(RuntimeError):
    """An enumeration or group-order cap would be exceeded."""
