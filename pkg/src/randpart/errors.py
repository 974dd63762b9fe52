"""Error classes shared across the package.

Every numerical or combinatorial failure raises one of these so the CLI can
map the error class to an exit code.
"""


class RandpartError(Exception):
    """Base class for all package errors."""


class DomainError(RandpartError, ValueError):
    """Argument outside the mathematically supported domain."""


class SizeLimitError(RandpartError, ValueError):
    """Input exceeds a hard size cap on an exhaustive routine."""


class MalformedInputError(RandpartError, ValueError):
    """Structurally invalid combinatorial data (bad partition, bad window, ...)."""


class PrecisionError(RandpartError, ArithmeticError):
    """Requested tolerance could not be certified."""

    def __init__(self, message: str, achieved: float | None = None):
        super().__init__(message)
        self.achieved = achieved


class TruncationError(RandpartError, ArithmeticError):
    """A truncated sum does not cover enough mass for the requested bound."""

    def __init__(self, message: str, tail_mass: float | None = None):
        super().__init__(message)
        self.tail_mass = tail_mass


class ContourError(RandpartError, ArithmeticError):
    """Contour integration failed (singular point on path, no convergence)."""


class StuckChainWarning(UserWarning):
    """The MCMC chain cannot move from its initial state."""
