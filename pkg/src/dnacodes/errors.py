"""Exception types shared by every module."""


class DnaCodeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(DnaCodeError, ValueError):
    """Bad parameters or input that violates a precondition."""


class DecodingError(DnaCodeError):
    """A received word could not be decoded.

    ``constraint`` names the check that failed so callers (and the CLI)
    can report a machine-readable diagnosis.
    """

    def __init__(self, message: str, constraint: str = "unknown"):
        super().__init__(message)
        self.constraint = constraint
