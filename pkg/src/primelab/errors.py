"""Exception types shared across the library.

All inherit from ValueError or RuntimeError so callers that do not care
about the fine-grained category can catch the builtin.
"""


class RangeError(ValueError):
    """An argument is outside the bounds an operation supports."""


class DomainError(ValueError):
    """A mathematical precondition fails (e.g. series evaluated where it diverges)."""


class ArgumentError(ValueError):
    """An argument is structurally invalid (wrong kind, not prime, not coprime...)."""


class ParseError(ValueError):
    """A data file could not be parsed; carries the offending line number."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class FormatError(ValueError):
    """A data file parsed but violates its format contract (ordering etc.)."""


class ResourceError(RuntimeError):
    """An operation would exceed a configured memory or search budget."""
