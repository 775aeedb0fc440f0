"""Exception types shared across the library."""


class CleanRingsError(Exception):
    """Base class for all library errors."""


class InvalidSizeError(CleanRingsError, ValueError):
    """Raised when a construction would produce a trivial or malformed ring."""


class InvalidArgumentError(CleanRingsError, ValueError):
    """Raised on arguments that violate an operation's precondition."""


class SizeCapError(CleanRingsError, ValueError):
    """Raised when a construction or classification exceeds the size cap."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required
        self.span = None  # filled in by the expression builder when available


class InvalidEndomorphismError(CleanRingsError, ValueError):
    """Raised when a map fails the endomorphism laws."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
        self.span = None


class InvalidIdealError(CleanRingsError, ValueError):
    """Raised when a subset is not closed or not absorbing."""


class ImproperIdealError(CleanRingsError, ValueError):
    """Raised when an ideal contains the ring identity."""


class UnsupportedCharacteristicError(CleanRingsError, ValueError):
    """Raised when an algebra of characteristic other than 2 is adjoined."""


class PreconditionError(CleanRingsError, ValueError):
    """Raised when an operation's stated precondition fails."""


class NotCleanError(CleanRingsError, ValueError):
    """Raised when an element admits no clean decomposition."""


class InternalCheckError(CleanRingsError, RuntimeError):
    """Raised when a result fails its own consistency verification."""
