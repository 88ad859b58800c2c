"""Exception types shared across the package."""


class MonogamyLabError(Exception):
    """Base class for all package errors."""


class DimensionError(MonogamyLabError):
    """Operand has the wrong Hilbert-space dimension or mode count."""


class PartitionError(MonogamyLabError):
    """Invalid subsystem / mode selection for the given state."""


class StateValidationError(MonogamyLabError):
    """State object violates its construction invariants."""


class UnphysicalStateError(MonogamyLabError):
    """Covariance matrix violates the uncertainty relation."""


class PurityError(MonogamyLabError):
    """Operation requires a pure state but got a mixed one."""


class NumericalError(MonogamyLabError):
    """Internal numerical failure (eigensolver pairing, optimizer, ...)."""
