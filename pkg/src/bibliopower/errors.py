"""Exception types shared across the package.

Two families matter to callers: ``DomainError`` covers invalid inputs
(rejected before any computation starts), while the ``RuntimeError``
subclasses signal that a well-formed request has no answer. The CLI maps
the first family to exit status 2 and the second to exit status 1.
"""


class BiblioPowerError(Exception):
    """Base class for all package errors."""


class DomainError(BiblioPowerError, ValueError):
    """An input violates a documented precondition."""


class UnsupportedRangeError(DomainError):
    """A parameter is outside the range the implementation certifies.

    Raised instead of silently returning a value whose accuracy is not
    guaranteed (e.g. a noncentrality parameter beyond the supported
    envelope).
    """


class NumListParseError(DomainError):
    """A numeric-list expression does not match the accepted grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class InfeasibleDesignError(BiblioPowerError, RuntimeError):
    """No design satisfies the request within the configured limits."""


class DegenerateSampleError(BiblioPowerError, RuntimeError):
    """A sample has zero variance, so the test statistic is undefined.

    The offending constant value is carried in ``value``.
    """

    def __init__(self, message: str, value):
        super().__init__(message)
        self.value = value
