"""Exception types shared by all evaluators."""


class AltXiError(Exception):
    """Base class; ``code`` is the machine-greppable tag printed by the CLI."""

    code = "E_GENERIC"


class DomainError(AltXiError, ValueError):
    code = "E_DOMAIN"


class ConvergenceError(AltXiError, ArithmeticError):
    """Raised when a series or quadrature runs out of budget.

    The best available approximation is kept on ``partial`` so callers can
    still inspect it.
    """

    code = "E_CONV"

    def __init__(self, message, partial=None, terms_used=0):
        super().__init__(message)
        self.partial = partial
        self.terms_used = terms_used
