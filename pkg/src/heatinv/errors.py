"""Exception hierarchy.

Two families: :class:`DomainError` for inputs outside a formula's validity
(CLI exit code 2) and :class:`NumericalError` for evaluations that could not
reach their tolerance (CLI exit code 3).
"""


class HeatInvError(Exception):
    """Base class for all package errors."""


class DomainError(HeatInvError, ValueError):
    """Argument outside the domain of the operation."""


class AdmissibilityError(DomainError):
    """Physical scenario violates the maximum-principle bounds."""


class UnsupportedOrderError(DomainError):
    """Requested expansion order is not available."""


class DiscriminantError(DomainError):
    """No admissible real root of the epsilon polynomial."""


class BracketError(DomainError):
    """Target value is not bracketed by the root-finding interval."""


class NumericalError(HeatInvError, ArithmeticError):
    """Numerical procedure failed to meet its accuracy contract."""


class ToleranceError(NumericalError):
    """Quadrature refinement exhausted its node budget."""


class TruncationError(NumericalError):
    """Series did not converge within the allowed number of terms."""
