"""Exception types raised by :mod:`isingnet`."""


class IsingNetError(Exception):
    """Base class for all package errors."""


class DomainError(IsingNetError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConstraintUndefinedError(DomainError):
    """The Ising angle constraint has no solution for the given angle."""


class SpecError(IsingNetError, ValueError):
    """A network description violates one of its invariants."""


class ClassificationUndefinedError(IsingNetError, ValueError):
    """Regime classification requested for a network where it is not defined."""


class ConsistencyError(IsingNetError, RuntimeError):
    """An internal cross-check between two computation routes failed."""


class NumericalFailure(IsingNetError, RuntimeError):
    """A numerical routine did not converge or produced an unreliable result."""
