"""Exception hierarchy shared by every fuzzlin module."""


class FuzzlinError(Exception):
    """Base class for all errors raised by fuzzlin."""


class DomainError(FuzzlinError, ValueError):
    """An argument lies outside the domain of the operation."""


class KindMismatchError(FuzzlinError, TypeError):
    """Triangular and trapezoidal numbers were mixed in one operation."""


class DegenerateScalarError(DomainError):
    """Scaling by zero would collapse a fuzzy number to a crisp point."""


class UnsupportedFormError(FuzzlinError, ValueError):
    """The linear program is not in one of the two canonical forms."""


class AdmissibilityError(DomainError):
    """A refuzzification parameter violates its admissible range.

    ``bounds`` holds the ``(lower, upper)`` open interval the parameter had
    to fall in, when one exists.
    """

    def __init__(self, message, bounds=None):
        super().__init__(message)
        self.bounds = bounds
