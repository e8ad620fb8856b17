class SecplanesError(Exception):
    """Base class for errors raised by this package."""


class PreconditionError(SecplanesError, ValueError):
    """Inputs fall outside the regime an operation is defined for.

    ``code`` is a short machine-readable tag such as ``NOT_RHO_ZERO``.
    """

    def __init__(self, message, code="PRECONDITION_FAIL"):
        super().__init__(message)
        self.code = code


class StepError(SecplanesError, ValueError):
    """A chain propagation step produced an invalid vanishing sequence."""

    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


class IntegralityError(SecplanesError, ArithmeticError):
    """A count that must be an integer reduced to a non-integral rational."""
