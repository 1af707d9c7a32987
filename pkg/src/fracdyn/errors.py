"""Exception hierarchy.

Two families matter for the command-line tool: configuration problems
(bad inputs, caught before any stepping) map to exit code 1, numerical
failures during a run map to exit code 2.
"""


class FracdynError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(FracdynError, ValueError):
    """Invalid configuration or setup input."""


class DomainError(FracdynError, ValueError):
    """Argument outside the mathematical domain of a function."""


class OutOfDomainError(FracdynError, ValueError):
    """Probe point outside a field's space-time domain."""


class NumericalError(FracdynError):
    """A computation failed while running."""


class StabilityError(NumericalError):
    """Step size incompatible with a growth coefficient; rejected at setup."""


class SingularSystemError(NumericalError):
    """A linear solve hit a zero pivot or a vanishing denominator."""


class QuadratureError(NumericalError):
    """Adaptive quadrature did not converge within its budget."""


class ValidityError(NumericalError):
    """A fuzzy system state left the membership validity region."""
