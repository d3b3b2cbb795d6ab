"""Exception hierarchy shared by the library and the command line."""


class TrihedralError(Exception):
    """Base class for all errors raised by this package."""


class SpecError(TrihedralError, ValueError):
    """Malformed input: bad syntax, or a generator outside SL(3, C)."""


class InvariantViolation(TrihedralError, AssertionError):
    """An internal consistency check failed.

    ``stage`` names the pipeline step that detected the problem so that
    reports and exit diagnostics can point at it.
    """

    def __init__(self, message: str, stage: str = "internal"):
        super().__init__(message)
        self.stage = stage
