"""Exception types shared across the package."""


class QlambertError(Exception):
    """Base class for errors raised by this package."""


class PrecisionError(QlambertError, ArithmeticError):
    """A computation needs coefficients beyond the known truncation order."""


class ExactDivisionError(QlambertError, ArithmeticError):
    """A polynomial division that was expected to be exact left a remainder."""


class DSLError(QlambertError, ValueError):
    """Syntax or evaluation error in the identity expression language.

    Carries the 1-based line and column of the offending token when known.
    """

    def __init__(self, message, line=None, col=None):
        if line is not None:
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)
        self.line = line
        self.col = col
