"""Exception hierarchy shared by every module."""


class NonelemError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(NonelemError, ValueError):
    """Argument sits on a pole (gamma at a non-positive integer, or a
    hypergeometric lower parameter that makes a denominator vanish)."""


class ConvergenceError(NonelemError, ArithmeticError):
    """A series or quadrature did not meet its stopping rule within the cap."""


class DomainError(NonelemError, ValueError):
    """Input is outside the documented domain of an operation."""


class RangeError(NonelemError, OverflowError):
    """Result is not representable as a finite double."""


class DivergentIntegral(NonelemError):
    """An infinite endpoint was requested where the integrand does not decay."""


class UnsupportedEndpoint(NonelemError, ValueError):
    """Infinite endpoint requested for an oscillatory or hyperbolic family."""
